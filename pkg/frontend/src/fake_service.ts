// A replaying stand-in for the session service, fed by fixtures that
// scripts/record_frontend_fixtures.py captured from the real server.
// It tracks the session position so undo and export stay consistent.

import { FetchLike } from "./api.js";
import { SessionModel, StateModel, StepResponse } from "./types.js";

export interface DiamondFlow {
  document: string;
  create: SessionModel;
  initial_state: StateModel;
  step_1_left: StepResponse;
  export_after_step: StateModel;
  step_2_left_error: { status: number; body: { detail: unknown } };
  undo: SessionModel;
  examples: { examples: string[] };
}

function json(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

export function fakeServiceFetch(fixture: DiamondFlow): FetchLike {
  const sessionId = fixture.create.id;
  let applied = 0; // how many steps are currently applied

  return async (url: string, init?: RequestInit): Promise<Response> => {
    const method = (init?.method ?? "GET").toUpperCase();
    const { pathname, searchParams } = new URL(url);
    const body = init?.body ? JSON.parse(String(init.body)) : null;

    if (method === "GET" && pathname === "/examples") {
      return json(fixture.examples);
    }
    if (method === "POST" && pathname === "/sessions") {
      if (body?.document !== fixture.document) {
        return json({ detail: "unexpected document" }, 422);
      }
      applied = 0;
      return json(fixture.create);
    }
    if (pathname === `/sessions/${sessionId}/steps` && method === "POST") {
      if (body?.vertex === "1" && body?.side === "left" && applied === 0) {
        applied = 1;
        return json(fixture.step_1_left);
      }
      if (body?.vertex === "2" && body?.side === "left") {
        return json(fixture.step_2_left_error.body, fixture.step_2_left_error.status);
      }
      return json({ detail: { reason: "not recorded" } }, 409);
    }
    if (pathname === `/sessions/${sessionId}/undo` && method === "POST") {
      if (applied === 0) return json({ detail: { reason: "nothing to undo" } }, 409);
      applied = 0;
      return json(fixture.undo);
    }
    if (pathname === `/sessions/${sessionId}/export` && method === "GET") {
      if (searchParams.get("format") === "json") {
        return json(applied === 1 ? fixture.export_after_step : fixture.initial_state);
      }
      return new Response("vertices: 1 2 3 4\n", { status: 200 });
    }
    if (pathname === `/sessions/${sessionId}` && method === "GET") {
      const state = applied === 1 ? fixture.step_1_left.state : fixture.initial_state;
      return json({ id: sessionId, state, history_length: applied });
    }
    return json({ detail: `unrecorded request ${method} ${pathname}` }, 404);
  };
}
