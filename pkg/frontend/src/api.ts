/** Client for POST /api/solve with typed failure modes. */

import type { SolveRequest, SolveResponse } from "./types.js";

export type SolveOutcome =
  | { kind: "ok"; raw: string; response: SolveResponse }
  | { kind: "http-error"; status: number; message: string; retryable: boolean }
  | { kind: "network-error"; message: string };

export async function postSolve(
  request: SolveRequest,
  base = "",
): Promise<SolveOutcome> {
  let resp: Response;
  try {
    resp = await fetch(`${base}/api/solve`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(request),
    });
  } catch (err) {
    return { kind: "network-error", message: String(err) };
  }
  const raw = await resp.text();
  if (!resp.ok) {
    let message = `solver returned ${resp.status}`;
    try {
      const body = JSON.parse(raw);
      if (body && typeof body.error === "string") message = body.error;
    } catch {
      /* keep the status message */
    }
    if (resp.status === 413) message = `framework too large: ${message}`;
    if (resp.status === 504) message = `computation timed out: ${message}`;
    return {
      kind: "http-error",
      status: resp.status,
      message,
      retryable: resp.status >= 500,
    };
  }
  return { kind: "ok", raw, response: JSON.parse(raw) as SolveResponse };
}
