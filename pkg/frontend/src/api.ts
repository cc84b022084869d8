/** Client for the session service. The UI never computes transmissions:
 * every number it shows comes out of one of these response documents. */

export interface PathTriplet {
  u: number;
  v: number;
  s: number;
}

export interface Flags {
  ti: boolean;
  mti: boolean;
  iti: boolean;
}

export interface Transmissions {
  core: number[];
  arcs: number[][];
}

export interface SessionView {
  id: string;
  closed: boolean;
  core_n: number;
  /** pairs [u, v]; plain arrays on the wire */
  core_edges: number[][];
  paths: PathTriplet[];
  connected: boolean;
  transmissions: Transmissions | null;
  flags: Flags | null;
  spectrum: string | null;
  rendered: string[];
  diagnostics: string[];
}

const BASE = '';

async function request(path: string, init?: RequestInit): Promise<SessionView> {
  const response = await fetch(BASE + path, {
    headers: { 'Content-Type': 'application/json' },
    ...init,
  });
  if (!response.ok) {
    throw new Error(`service error ${response.status}: ${await response.text()}`);
  }
  return (await response.json()) as SessionView;
}

export function createSession(coreG6?: string): Promise<SessionView> {
  return request('/sessions', {
    method: 'POST',
    body: JSON.stringify(coreG6 ? { core_g6: coreG6 } : {}),
  });
}

export function getSession(id: string): Promise<SessionView> {
  return request(`/sessions/${id}`);
}

export function sendCommand(id: string, line: string): Promise<SessionView> {
  return request(`/sessions/${id}/commands`, {
    method: 'POST',
    body: JSON.stringify({ line }),
  });
}

export interface FamilyChoice {
  tag: 'G1' | 'G2' | 'G3' | 'G4' | 'DOB';
  n?: number;
  m?: number;
  k?: number;
}

export function loadFamily(id: string, choice: FamilyChoice): Promise<SessionView> {
  return request(`/sessions/${id}/family`, {
    method: 'POST',
    body: JSON.stringify({ tag: choice.tag, n: choice.n ?? 0, m: choice.m ?? 0, k: choice.k ?? 0 }),
  });
}
