// Message shapes for the live bridge websocket, plus the small amount of
// MIDI byte knowledge the panel needs to print incoming traffic.

export const PROTOCOL_VERSION = 1;

export interface GestureMessage {
  v: number;
  type: "gesture";
  squeeze: number;
  left: number;
  right: number;
}

export interface ButtonMessage {
  v: number;
  type: "button";
  id: number;
  pressed: boolean;
}

export interface ModeMessage {
  v: number;
  type: "mode";
  pressed: boolean;
}

export type InboundMessage = GestureMessage | ButtonMessage | ModeMessage;

export interface MidiFrame {
  v: number;
  type: "midi";
  t_us: number;
  bytes: number[];
  decoded: string;
}

export interface StatsFrame {
  v: number;
  type: "stats";
  messages_sent: number;
  ccs_coalesced: number;
  peak_queue_depth: number;
  peak_msgs_per_sec: number;
  msgs_per_sec: number;
  capacity_msgs_per_sec: number;
}

export interface ErrorFrame {
  v: number;
  type: "error";
  message: string;
}

export type OutboundFrame = MidiFrame | StatsFrame | ErrorFrame;

function clamp01(x: number): number {
  if (!Number.isFinite(x)) return 0;
  return Math.min(1, Math.max(0, x));
}

export function gestureMessage(squeeze: number, left: number, right: number): GestureMessage {
  return {
    v: PROTOCOL_VERSION,
    type: "gesture",
    squeeze: clamp01(squeeze),
    left: clamp01(left),
    right: clamp01(right),
  };
}

export function buttonMessage(id: number, pressed: boolean): ButtonMessage {
  return { v: PROTOCOL_VERSION, type: "button", id, pressed };
}

export function modeMessage(pressed: boolean): ModeMessage {
  return { v: PROTOCOL_VERSION, type: "mode", pressed };
}

function isByteArray(x: unknown): x is number[] {
  return Array.isArray(x) && x.every((b) => typeof b === "number" && Number.isInteger(b) && b >= 0 && b <= 255);
}

/** Parse one websocket text frame from the bridge. Returns null for anything unrecognized. */
export function parseFrame(text: string): OutboundFrame | null {
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch {
    return null;
  }
  if (typeof raw !== "object" || raw === null) return null;
  const obj = raw as Record<string, unknown>;
  if (obj.v !== PROTOCOL_VERSION) return null;
  switch (obj.type) {
    case "midi":
      if (typeof obj.t_us === "number" && isByteArray(obj.bytes) && typeof obj.decoded === "string") {
        return { v: PROTOCOL_VERSION, type: "midi", t_us: obj.t_us, bytes: obj.bytes, decoded: obj.decoded };
      }
      return null;
    case "stats": {
      const fields = [
        "messages_sent",
        "ccs_coalesced",
        "peak_queue_depth",
        "peak_msgs_per_sec",
        "msgs_per_sec",
        "capacity_msgs_per_sec",
      ] as const;
      if (fields.every((f) => typeof obj[f] === "number")) {
        return {
          v: PROTOCOL_VERSION,
          type: "stats",
          messages_sent: obj.messages_sent as number,
          ccs_coalesced: obj.ccs_coalesced as number,
          peak_queue_depth: obj.peak_queue_depth as number,
          peak_msgs_per_sec: obj.peak_msgs_per_sec as number,
          msgs_per_sec: obj.msgs_per_sec as number,
          capacity_msgs_per_sec: obj.capacity_msgs_per_sec as number,
        };
      }
      return null;
    }
    case "error":
      if (typeof obj.message === "string") {
        return { v: PROTOCOL_VERSION, type: "error", message: obj.message };
      }
      return null;
    default:
      return null;
  }
}

export function hexByte(b: number): string {
  return b.toString(16).toUpperCase().padStart(2, "0");
}

/** Human text for a 3-byte message, matching how the panel log prints traffic. */
export function decodeBytes(bytes: number[]): string {
  if (bytes.length !== 3) return "unknown";
  const [status, d1, d2] = bytes;
  const family = status & 0xf0;
  const channel = (status & 0x0f) + 1;
  if (family === 0x90) {
    return `NoteOn ch${channel} n${d1} v${d2}`;
  }
  if (family === 0x80) {
    // note-off arrives as note-on with velocity zero after normalization,
    // but print a raw note-off faithfully if one ever shows up
    return `NoteOn ch${channel} n${d1} v0`;
  }
  if (family === 0xb0) {
    return `ControlChange ch${channel} cc${d1} v${d2}`;
  }
  return "unknown";
}

/** One event-log line: hex bytes then the decoded meaning. */
export function renderEvent(bytes: number[]): string {
  return `${bytes.map(hexByte).join(" ")} ${decodeBytes(bytes)}`;
}
