/**
 * Wiring: toolbar modes, canvas interaction, text panel with debounced
 * parsing, solve runs against the service, output panel and download.
 * One solve in flight at a time; a newer run makes any older reply
 * invisible (the server request itself is not cancelled).
 */

import { postSolve } from "./api.js";
import { drawEditor, nodeAt } from "./canvas.js";
import {
  EditAction,
  EditorState,
  applyAction,
  framework,
  initialState,
  withResults,
} from "./editor.js";
import { runLayout } from "./layout.js";
import { INDEXES, IndexId, SEMANTICS, SemanticsId } from "./types.js";
import { rankingLine, tableRows } from "./viewmodel.js";

type Mode = "select" | "add-node" | "add-edge" | "delete";

let state: EditorState = initialState();
let mode: Mode = "select";
let edgeSource: string | null = null;
let dragging: string | null = null;
let pinned = new Set<string>();
let nextNodeOrdinal = 0;
let solveGeneration = 0;

const $ = <T extends HTMLElement>(id: string): T => document.getElementById(id) as T;

const canvas = $<HTMLCanvasElement>("canvas");
const textPanel = $<HTMLTextAreaElement>("apx-text");
const banner = $<HTMLDivElement>("banner");
const outputPanel = $<HTMLDivElement>("output");
const semanticsSelect = $<HTMLSelectElement>("semantics");
const indexSelect = $<HTMLSelectElement>("index");
const downloadButton = $<HTMLButtonElement>("download");

function dispatch(action: EditAction, relayout = false): void {
  const before = state;
  state = applyAction(state, action);
  if (relayout && state !== before) {
    state = { ...state, nodes: runLayout(state.nodes, state.edges, pinned) };
  }
  render();
}

function render(): void {
  drawEditor(canvas, state);
  if (document.activeElement !== textPanel) textPanel.value = state.text;

  banner.textContent = state.error ?? "";
  banner.className = state.error ? "banner error" : "banner";

  const result = state.results?.result ?? null;
  if (!result) {
    outputPanel.innerHTML = "<p class='hint'>no results yet - draw a framework and press run</p>";
    downloadButton.disabled = true;
  } else {
    const rows = tableRows(result)
      .map(
        (r) =>
          `<tr><td>${r.argument}</td><td>${r.piIn}</td><td>${r.piOut}</td><td>${r.classIndex}</td></tr>`,
      )
      .join("");
    const warnings = (state.results?.warnings ?? [])
      .map((w) => `<p class="warning">${w}</p>`)
      .join("");
    outputPanel.innerHTML =
      `<p class="ranking">${rankingLine(result)}</p>` +
      `<table><thead><tr><th>argument</th><th>pi_in</th><th>pi_out</th><th>class</th></tr></thead>` +
      `<tbody>${rows}</tbody></table>` +
      warnings;
    downloadButton.disabled = false;
  }
}

async function runSolve(): Promise<void> {
  const fw = framework(state);
  if (fw.arguments.length === 0) {
    state = { ...state, error: "draw at least one argument first" };
    render();
    return;
  }
  const generation = ++solveGeneration;
  banner.textContent = "solving...";
  banner.className = "banner";
  const outcome = await postSolve({
    framework: fw,
    semantics: state.semantics,
    task: "rank",
    index: state.index,
  });
  if (generation !== solveGeneration) return; // a newer run owns the display
  if (outcome.kind === "ok") {
    state = withResults(state, outcome.raw, outcome.response);
  } else if (outcome.kind === "network-error") {
    state = { ...state, error: `network failure, try again: ${outcome.message}` };
  } else {
    state = { ...state, error: outcome.message };
  }
  render();
}

function freshNodeId(): string {
  const alphabet = "abcdefghijklmnopqrstuvwxyz";
  while (nextNodeOrdinal < 1000) {
    const i = nextNodeOrdinal++;
    const candidate =
      i < 26 ? alphabet[i] : alphabet[i % 26] + String(Math.floor(i / 26));
    if (!state.nodes.some((n) => n.id === candidate)) return candidate;
  }
  return `x${Date.now()}`;
}

// -- canvas interaction ------------------------------------------------------

function canvasPoint(event: MouseEvent): { x: number; y: number } {
  const rect = canvas.getBoundingClientRect();
  return { x: event.clientX - rect.left, y: event.clientY - rect.top };
}

canvas.addEventListener("mousedown", (event) => {
  const { x, y } = canvasPoint(event);
  const hit = nodeAt(state, x, y);
  if (mode === "select") {
    dispatch({ kind: "select", id: hit });
    if (hit) {
      dragging = hit;
      pinned.add(hit);
    }
  } else if (mode === "add-node" && !hit) {
    dispatch({ kind: "add-node", id: freshNodeId(), x, y });
  } else if (mode === "add-edge" && hit) {
    if (edgeSource === null) {
      edgeSource = hit;
      dispatch({ kind: "select", id: hit });
    } else {
      dispatch(
        edgeSource === hit
          ? { kind: "add-self-loop", id: hit }
          : { kind: "add-edge", from: edgeSource, to: hit },
      );
      edgeSource = null;
      dispatch({ kind: "select", id: null });
    }
  } else if (mode === "delete" && hit) {
    dispatch({ kind: "delete", id: hit });
  }
});

canvas.addEventListener("mousemove", (event) => {
  if (!dragging) return;
  const { x, y } = canvasPoint(event);
  dispatch({ kind: "move", id: dragging, x, y });
});

window.addEventListener("mouseup", () => {
  dragging = null;
});

canvas.addEventListener("dblclick", (event) => {
  const { x, y } = canvasPoint(event);
  const hit = nodeAt(state, x, y);
  if (!hit) return;
  const name = window.prompt(`rename argument '${hit}' to:`, hit);
  if (name && name !== hit) dispatch({ kind: "rename", from: hit, to: name });
});

// -- panels --------------------------------------------------------------------

let textTimer: number | undefined;
textPanel.addEventListener("input", () => {
  window.clearTimeout(textTimer);
  textTimer = window.setTimeout(() => {
    dispatch({ kind: "set-text", text: textPanel.value }, true);
  }, 300);
});

for (const s of SEMANTICS) semanticsSelect.add(new Option(s, s));
semanticsSelect.value = state.semantics;
semanticsSelect.addEventListener("change", () => {
  dispatch({ kind: "set-semantics", semantics: semanticsSelect.value as SemanticsId });
});

for (const i of INDEXES) indexSelect.add(new Option(i, i));
indexSelect.value = state.index;
indexSelect.addEventListener("change", () => {
  dispatch({ kind: "set-index", index: indexSelect.value as IndexId });
});

for (const m of ["select", "add-node", "add-edge", "delete"] as Mode[]) {
  $(`mode-${m}`).addEventListener("click", () => {
    mode = m;
    edgeSource = null;
    document
      .querySelectorAll(".mode-button")
      .forEach((b) => b.classList.toggle("active", b.id === `mode-${m}`));
  });
}

$("run").addEventListener("click", () => void runSolve());
$("relayout").addEventListener("click", () => {
  pinned = new Set();
  state = { ...state, nodes: runLayout(state.nodes, state.edges, pinned) };
  render();
});

downloadButton.addEventListener("click", () => {
  if (!state.rawResults) return;
  // the stored raw body guarantees a byte-identical payload
  const blob = new Blob([state.rawResults], { type: "application/json" });
  const link = document.createElement("a");
  link.href = URL.createObjectURL(blob);
  link.download = "ranking.json";
  link.click();
  URL.revokeObjectURL(link.href);
});

render();
