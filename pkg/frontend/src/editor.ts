/**
 * Editor state and actions. The canvas graph and the text panel always
 * denote the same framework: every graph action regenerates the text, and
 * a successful text edit rebuilds the graph. Any change to the framework
 * clears previously displayed results.
 */

import { Framework, isValidId, parseApx, serializeApx } from "./apx.js";
import type { IndexId, SemanticsId, SolveResponse } from "./types.js";

export interface NodeView {
  id: string;
  x: number;
  y: number;
}

export interface EditorState {
  nodes: NodeView[];
  edges: [string, string][];
  selection: string | null;
  text: string;
  semantics: SemanticsId;
  index: IndexId;
  /** parsed body of the last successful solve, untouched */
  results: SolveResponse | null;
  /** raw response text of the last successful solve, for byte-exact download */
  rawResults: string | null;
  error: string | null;
}

export type EditAction =
  | { kind: "add-node"; id: string; x?: number; y?: number }
  | { kind: "add-edge"; from: string; to: string }
  | { kind: "add-self-loop"; id: string }
  | { kind: "delete"; id: string }
  | { kind: "delete-edge"; from: string; to: string }
  | { kind: "rename"; from: string; to: string }
  | { kind: "set-text"; text: string }
  | { kind: "select"; id: string | null }
  | { kind: "move"; id: string; x: number; y: number }
  | { kind: "set-semantics"; semantics: SemanticsId }
  | { kind: "set-index"; index: IndexId };

export function initialState(): EditorState {
  return {
    nodes: [],
    edges: [],
    selection: null,
    text: "",
    semantics: "complete",
    index: "shapley",
    results: null,
    rawResults: null,
    error: null,
  };
}

export function framework(state: EditorState): Framework {
  return { arguments: state.nodes.map((n) => n.id), attacks: state.edges.map((e) => [...e]) };
}

function regenerated(state: EditorState, nodes: NodeView[], edges: [string, string][]): EditorState {
  const text = serializeApx({ arguments: nodes.map((n) => n.id), attacks: edges });
  // framework changed: stale results must not stay on screen
  return { ...state, nodes, edges, text, results: null, rawResults: null, error: null };
}

function fail(state: EditorState, message: string): EditorState {
  return { ...state, error: message };
}

export function applyAction(state: EditorState, action: EditAction): EditorState {
  switch (action.kind) {
    case "add-node": {
      if (!isValidId(action.id)) return fail(state, `invalid argument id '${action.id}'`);
      if (state.nodes.some((n) => n.id === action.id))
        return fail(state, `argument '${action.id}' already exists`);
      const node = { id: action.id, x: action.x ?? 0, y: action.y ?? 0 };
      return regenerated(state, [...state.nodes, node], state.edges);
    }
    case "add-edge":
    case "add-self-loop": {
      const from = action.kind === "add-self-loop" ? action.id : action.from;
      const to = action.kind === "add-self-loop" ? action.id : action.to;
      if (!state.nodes.some((n) => n.id === from)) return fail(state, `no such argument '${from}'`);
      if (!state.nodes.some((n) => n.id === to)) return fail(state, `no such argument '${to}'`);
      if (state.edges.some(([s, t]) => s === from && t === to))
        return fail(state, `attack (${from},${to}) already exists`);
      return regenerated(state, state.nodes, [...state.edges, [from, to]]);
    }
    case "delete-edge": {
      const edges = state.edges.filter(([s, t]) => !(s === action.from && t === action.to));
      if (edges.length === state.edges.length)
        return fail(state, `no attack (${action.from},${action.to})`);
      return regenerated(state, state.nodes, edges);
    }
    case "delete": {
      if (!state.nodes.some((n) => n.id === action.id))
        return fail(state, `no such argument '${action.id}'`);
      const nodes = state.nodes.filter((n) => n.id !== action.id);
      const edges = state.edges.filter(([s, t]) => s !== action.id && t !== action.id);
      const next = regenerated(state, nodes, edges);
      return state.selection === action.id ? { ...next, selection: null } : next;
    }
    case "rename": {
      if (!isValidId(action.to)) return fail(state, `invalid argument id '${action.to}'`);
      if (!state.nodes.some((n) => n.id === action.from))
        return fail(state, `no such argument '${action.from}'`);
      if (action.from !== action.to && state.nodes.some((n) => n.id === action.to))
        return fail(state, `argument '${action.to}' already exists`);
      const nodes = state.nodes.map((n) => (n.id === action.from ? { ...n, id: action.to } : n));
      const edges = state.edges.map(
        ([s, t]) =>
          [s === action.from ? action.to : s, t === action.from ? action.to : t] as [string, string],
      );
      const next = regenerated(state, nodes, edges);
      return state.selection === action.from ? { ...next, selection: action.to } : next;
    }
    case "set-text": {
      let fw: Framework;
      try {
        fw = parseApx(action.text);
      } catch (err) {
        // keep the typed-out text visible, flag the error, drop stale results
        return { ...state, text: action.text, results: null, rawResults: null, error: String((err as Error).message) };
      }
      const known = new Map(state.nodes.map((n) => [n.id, n]));
      const nodes = fw.arguments.map(
        (id, i) => known.get(id) ?? { id, x: 60 + 60 * (i % 8), y: 60 + 60 * Math.floor(i / 8) },
      );
      return { ...regenerated(state, nodes, fw.attacks), text: action.text };
    }
    case "select":
      return { ...state, selection: action.id };
    case "move": {
      // positions are presentation only: no text regeneration, results stay
      const nodes = state.nodes.map((n) =>
        n.id === action.id ? { ...n, x: action.x, y: action.y } : n,
      );
      return { ...state, nodes };
    }
    case "set-semantics":
      return { ...state, semantics: action.semantics, results: null, rawResults: null };
    case "set-index":
      return { ...state, index: action.index, results: null, rawResults: null };
  }
}

export function withResults(state: EditorState, raw: string, parsed: SolveResponse): EditorState {
  return { ...state, results: parsed, rawResults: raw, error: null };
}
