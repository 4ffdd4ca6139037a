/**
 * Small force-directed placement: node repulsion, spring attraction along
 * edges, gentle pull to the canvas centre. Positions are presentation
 * only and never serialized.
 */

import type { NodeView } from "./editor.js";

export interface LayoutOptions {
  width: number;
  height: number;
  springLength: number;
  iterations: number;
}

const DEFAULTS: LayoutOptions = { width: 640, height: 420, springLength: 110, iterations: 160 };

export function runLayout(
  nodes: NodeView[],
  edges: [string, string][],
  pinned: Set<string> = new Set(),
  options: Partial<LayoutOptions> = {},
): NodeView[] {
  const opt = { ...DEFAULTS, ...options };
  const pos = new Map(nodes.map((n) => [n.id, { x: n.x, y: n.y }]));
  // seed unplaced nodes on a circle so the springs have something to work on
  nodes.forEach((n, i) => {
    if (n.x === 0 && n.y === 0) {
      const angle = (2 * Math.PI * i) / Math.max(nodes.length, 1);
      pos.set(n.id, {
        x: opt.width / 2 + (opt.width / 4) * Math.cos(angle),
        y: opt.height / 2 + (opt.height / 4) * Math.sin(angle),
      });
    }
  });

  for (let iter = 0; iter < opt.iterations; iter++) {
    const force = new Map(nodes.map((n) => [n.id, { x: 0, y: 0 }]));
    for (let i = 0; i < nodes.length; i++) {
      for (let j = i + 1; j < nodes.length; j++) {
        const a = pos.get(nodes[i].id)!;
        const b = pos.get(nodes[j].id)!;
        let dx = a.x - b.x;
        let dy = a.y - b.y;
        const dist = Math.max(Math.hypot(dx, dy), 1);
        const push = (opt.springLength * opt.springLength) / dist / dist;
        dx = (dx / dist) * push * 30;
        dy = (dy / dist) * push * 30;
        const fa = force.get(nodes[i].id)!;
        const fb = force.get(nodes[j].id)!;
        fa.x += dx;
        fa.y += dy;
        fb.x -= dx;
        fb.y -= dy;
      }
    }
    for (const [s, t] of edges) {
      if (s === t) continue;
      const a = pos.get(s);
      const b = pos.get(t);
      if (!a || !b) continue;
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const dist = Math.max(Math.hypot(dx, dy), 1);
      const pull = (dist - opt.springLength) * 0.02;
      const fa = force.get(s)!;
      const fb = force.get(t)!;
      fa.x += (dx / dist) * pull * 30;
      fa.y += (dy / dist) * pull * 30;
      fb.x -= (dx / dist) * pull * 30;
      fb.y -= (dy / dist) * pull * 30;
    }
    for (const n of nodes) {
      if (pinned.has(n.id)) continue;
      const p = pos.get(n.id)!;
      const f = force.get(n.id)!;
      f.x += (opt.width / 2 - p.x) * 0.005;
      f.y += (opt.height / 2 - p.y) * 0.005;
      const cap = 18;
      p.x += Math.max(-cap, Math.min(cap, f.x));
      p.y += Math.max(-cap, Math.min(cap, f.y));
      p.x = Math.max(28, Math.min(opt.width - 28, p.x));
      p.y = Math.max(28, Math.min(opt.height - 28, p.y));
    }
  }
  return nodes.map((n) => ({ ...n, ...pos.get(n.id)! }));
}
