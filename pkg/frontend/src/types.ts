// Payload shapes of the session service.  The explorer never computes any
// algebra: whatever these carry is displayed verbatim.

export type ChainCode = {
  a: number;
  code: string;
};

export type Position = {
  index: number;
  box: [number, number];
  color: number;
  level: number;
  frozen: boolean;
  kr: string | null;
  laurent: string;
};

export type Move = {
  s: number;
  kind: "transposition" | "tsystem";
};

export type Operation =
  | { op: "mutate"; k: number }
  | { op: "boxmove"; s: number };

export type SessionState = {
  id: string;
  type: string;
  range: [number, number];
  chain: ChainCode;
  movable: Move[];
  positions: Position[];
  b: [[number, number], [number, number], number][];
  history: Operation[];
};

export type QuiverJson = {
  vertices: number[];
  arrows: [number, number][];
};

export type VariablesEntry = {
  index: number;
  box: [number, number];
  kr: string | null;
  laurent: string;
};

export type ApiError = {
  error: string;
  detail: string;
};

export type SessionConfig = {
  type: string;
  seq?: string;
  range?: [number, number];
  chain?: string;
};
