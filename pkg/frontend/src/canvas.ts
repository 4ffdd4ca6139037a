/** Canvas renderer: greyscale-filled nodes, arrowed attack edges. */

import type { EditorState } from "./editor.js";
import { shadeOf, shadeToFill } from "./viewmodel.js";

const NODE_R = 18;

export function drawEditor(canvas: HTMLCanvasElement, state: EditorState): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const pos = new Map(state.nodes.map((n) => [n.id, n]));
  const result = state.results ? state.results.result : null;

  ctx.strokeStyle = "#555";
  ctx.fillStyle = "#555";
  ctx.lineWidth = 1.4;
  for (const [s, t] of state.edges) {
    const a = pos.get(s);
    const b = pos.get(t);
    if (!a || !b) continue;
    if (s === t) {
      drawSelfLoop(ctx, a.x, a.y);
      continue;
    }
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const dist = Math.max(Math.hypot(dx, dy), 1);
    const fromX = a.x + (dx / dist) * NODE_R;
    const fromY = a.y + (dy / dist) * NODE_R;
    const toX = b.x - (dx / dist) * (NODE_R + 4);
    const toY = b.y - (dy / dist) * (NODE_R + 4);
    ctx.beginPath();
    ctx.moveTo(fromX, fromY);
    ctx.lineTo(toX, toY);
    ctx.stroke();
    drawArrowhead(ctx, fromX, fromY, toX, toY);
  }

  for (const node of state.nodes) {
    const shade = shadeOf(result, node.id);
    ctx.beginPath();
    ctx.arc(node.x, node.y, NODE_R, 0, 2 * Math.PI);
    ctx.fillStyle = state.results ? shadeToFill(shade) : "#e8e8ee";
    ctx.fill();
    ctx.lineWidth = state.selection === node.id ? 3 : 1.4;
    ctx.strokeStyle = state.selection === node.id ? "#0a63c2" : "#333";
    ctx.stroke();
    ctx.fillStyle = shade < 0.45 && state.results ? "#fff" : "#111";
    ctx.font = "13px sans-serif";
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    ctx.fillText(node.id, node.x, node.y);
  }
}

function drawSelfLoop(ctx: CanvasRenderingContext2D, x: number, y: number): void {
  ctx.beginPath();
  ctx.arc(x, y - NODE_R - 8, 10, 0.4 * Math.PI, 2.4 * Math.PI);
  ctx.stroke();
  drawArrowhead(ctx, x - 14, y - NODE_R - 2, x - 6, y - NODE_R + 2);
}

function drawArrowhead(
  ctx: CanvasRenderingContext2D,
  fromX: number,
  fromY: number,
  toX: number,
  toY: number,
): void {
  const angle = Math.atan2(toY - fromY, toX - fromX);
  const size = 7;
  ctx.beginPath();
  ctx.moveTo(toX, toY);
  ctx.lineTo(toX - size * Math.cos(angle - 0.4), toY - size * Math.sin(angle - 0.4));
  ctx.lineTo(toX - size * Math.cos(angle + 0.4), toY - size * Math.sin(angle + 0.4));
  ctx.closePath();
  ctx.fill();
}

export function nodeAt(state: EditorState, x: number, y: number): string | null {
  for (let i = state.nodes.length - 1; i >= 0; i--) {
    const n = state.nodes[i];
    if (Math.hypot(n.x - x, n.y - y) <= NODE_R) return n.id;
  }
  return null;
}
