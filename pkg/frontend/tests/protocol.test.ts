import { describe, expect, it } from "vitest";
import {
  PROTOCOL_VERSION,
  buttonMessage,
  decodeBytes,
  gestureMessage,
  hexByte,
  modeMessage,
  parseFrame,
  renderEvent,
} from "../src/protocol.js";

describe("renderEvent", () => {
  it("prints a note-on as hex bytes plus meaning", () => {
    expect(renderEvent([0x93, 0x3c, 0x7f])).toBe("93 3C 7F NoteOn ch4 n60 v127");
  });

  it("prints a control change", () => {
    expect(renderEvent([0xb0, 0x10, 0x5e])).toBe("B0 10 5E ControlChange ch1 cc16 v94");
  });

  it("prints a release as velocity zero", () => {
    expect(renderEvent([0x93, 0x3c, 0x00])).toBe("93 3C 00 NoteOn ch4 n60 v0");
  });
});

describe("decodeBytes", () => {
  it("normalizes a raw note-off to velocity zero", () => {
    expect(decodeBytes([0x83, 0x3c, 0x40])).toBe("NoteOn ch4 n60 v0");
  });

  it("labels other message families unknown", () => {
    expect(decodeBytes([0xe0, 0x00, 0x40])).toBe("unknown");
    expect(decodeBytes([0x93, 0x3c])).toBe("unknown");
  });

  it("derives the channel from the status low nibble", () => {
    expect(decodeBytes([0x9d, 0x46, 0x7f])).toBe("NoteOn ch14 n70 v127");
    expect(decodeBytes([0xb2, 0x12, 0x3f])).toBe("ControlChange ch3 cc18 v63");
  });
});

describe("hexByte", () => {
  it("pads and uppercases", () => {
    expect(hexByte(0)).toBe("00");
    expect(hexByte(0x5e)).toBe("5E");
    expect(hexByte(255)).toBe("FF");
  });
});

describe("parseFrame", () => {
  it("accepts a midi frame", () => {
    const frame = parseFrame(
      JSON.stringify({ v: 1, type: "midi", t_us: 10960, bytes: [0x93, 0x3c, 0x7f], decoded: "NoteOn ch=4 note=60 vel=127" }),
    );
    expect(frame).not.toBeNull();
    expect(frame!.type).toBe("midi");
    if (frame!.type === "midi") {
      expect(frame!.bytes).toEqual([0x93, 0x3c, 0x7f]);
      expect(frame!.t_us).toBe(10960);
    }
  });

  it("accepts a stats frame", () => {
    const frame = parseFrame(
      JSON.stringify({
        v: 1,
        type: "stats",
        messages_sent: 4,
        ccs_coalesced: 0,
        peak_queue_depth: 2,
        peak_msgs_per_sec: 4,
        msgs_per_sec: 4,
        capacity_msgs_per_sec: 1041,
      }),
    );
    expect(frame).not.toBeNull();
    expect(frame!.type).toBe("stats");
    if (frame!.type === "stats") expect(frame!.capacity_msgs_per_sec).toBe(1041);
  });

  it("accepts an error frame", () => {
    const frame = parseFrame(JSON.stringify({ v: 1, type: "error", message: "nope" }));
    expect(frame).toEqual({ v: 1, type: "error", message: "nope" });
  });

  it("rejects junk, wrong versions, and malformed fields", () => {
    expect(parseFrame("not json")).toBeNull();
    expect(parseFrame("42")).toBeNull();
    expect(parseFrame(JSON.stringify({ v: 2, type: "error", message: "x" }))).toBeNull();
    expect(parseFrame(JSON.stringify({ v: 1, type: "mystery" }))).toBeNull();
    expect(parseFrame(JSON.stringify({ v: 1, type: "midi", t_us: 1, bytes: ["ff"], decoded: "x" }))).toBeNull();
    expect(parseFrame(JSON.stringify({ v: 1, type: "stats", messages_sent: "4" }))).toBeNull();
  });
});

describe("message builders", () => {
  it("stamps the protocol version", () => {
    expect(gestureMessage(0, 0, 0).v).toBe(PROTOCOL_VERSION);
    expect(buttonMessage(0, true).v).toBe(PROTOCOL_VERSION);
    expect(modeMessage(false).v).toBe(PROTOCOL_VERSION);
  });

  it("clamps gesture axes into the unit interval", () => {
    const msg = gestureMessage(-0.5, 1.5, Number.NaN);
    expect(msg.squeeze).toBe(0);
    expect(msg.left).toBe(1);
    expect(msg.right).toBe(0);
  });

  it("carries button identity and edge", () => {
    expect(buttonMessage(7, true)).toEqual({ v: 1, type: "button", id: 7, pressed: true });
    expect(modeMessage(true)).toEqual({ v: 1, type: "mode", pressed: true });
  });
});
