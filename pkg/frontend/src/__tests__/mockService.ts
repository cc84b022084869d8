/** Fetch mock replaying recorded session-service response documents.
 *
 * Every document served here was produced by the real service (see
 * fixtures/), so the tests exercise the actual wire format, and the mock
 * records each request for the data-flow assertions: whatever the UI
 * displays must have arrived through one of these responses.
 */

import { vi } from 'vitest';
import type { SessionView } from '../api';
import intervalReplay from './fixtures/interval_replay.json';
import dob3Family from './fixtures/dob3_family.json';
import errorResponse from './fixtures/error_response.json';

export interface RecordedRequest {
  method: string;
  path: string;
  body: unknown;
}

export const EMPTY_VIEW: SessionView = {
  id: 'fixture-session',
  closed: false,
  core_n: 0,
  core_edges: [],
  paths: [],
  connected: true,
  transmissions: null,
  flags: null,
  spectrum: null,
  rendered: ['(no core set)'],
  diagnostics: [],
};

const replayByLine = new Map<string, SessionView>(
  (intervalReplay as { line: string; state: SessionView }[]).map((step) => [
    step.line,
    step.state,
  ]),
);

export const INTERVAL_SCRIPT = (intervalReplay as { line: string }[]).map((s) => s.line);
export const INTERVAL_FINAL = replayByLine.get(INTERVAL_SCRIPT[INTERVAL_SCRIPT.length - 1])!;
export const DOB3_VIEW = dob3Family as SessionView;
export const ERROR_VIEW = errorResponse as SessionView;

export function installMockService(overrides?: Map<string, SessionView>) {
  const requests: RecordedRequest[] = [];
  const fetchMock = vi.fn(async (input: RequestInfo | URL, init?: RequestInit) => {
    const path = String(input);
    const method = init?.method ?? 'GET';
    const body = init?.body ? JSON.parse(String(init.body)) : null;
    requests.push({ method, path, body });

    const respond = (view: SessionView) =>
      new Response(JSON.stringify(view), { status: 200 });

    if (method === 'POST' && path === '/sessions') {
      return new Response(JSON.stringify(EMPTY_VIEW), { status: 201 });
    }
    if (method === 'POST' && path.endsWith('/commands')) {
      const line = (body as { line: string }).line.trim();
      const view = overrides?.get(line) ?? replayByLine.get(line);
      return respond(view ?? ERROR_VIEW);
    }
    if (method === 'POST' && path.endsWith('/family')) {
      return respond(DOB3_VIEW);
    }
    return respond(EMPTY_VIEW);
  });
  vi.stubGlobal('fetch', fetchMock);
  return { requests, fetchMock };
}

/** All transmissions a response document carries: the universe of numbers
 * the UI is allowed to display for it. */
export function transmissionsIn(view: SessionView): number[] {
  if (!view.transmissions) {
    return [];
  }
  return [...view.transmissions.core, ...view.transmissions.arcs.flat()];
}
