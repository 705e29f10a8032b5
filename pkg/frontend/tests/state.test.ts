import { describe, expect, it } from "vitest";
import { PanelState, RateMeter, SCROLLBACK_CAP } from "../src/state.js";

describe("PanelState", () => {
  it("clamps axis writes into the unit interval", () => {
    const s = new PanelState();
    s.setAxis("squeeze", 1.7);
    s.setAxis("left", -0.2);
    s.setAxis("right", 0.25);
    expect(s.squeeze).toBe(1);
    expect(s.left).toBe(0);
    expect(s.right).toBe(0.25);
  });

  it("starts at the resting pose", () => {
    const s = new PanelState();
    expect(s.squeeze).toBe(0);
    expect(s.buttons).toEqual(new Array(10).fill(false));
    expect(s.mode).toBe(false);
    expect(s.status).toBe("connecting");
  });

  it("caps the scrollback, dropping the oldest lines", () => {
    const s = new PanelState();
    for (let i = 0; i < 1500; i += 1) {
      s.pushLog({ t_us: i, text: `line ${i}` });
    }
    expect(s.scrollback.length).toBe(SCROLLBACK_CAP);
    expect(s.scrollback[0].text).toBe("line 500");
    expect(s.scrollback[s.scrollback.length - 1].text).toBe("line 1499");
  });
});

describe("RateMeter", () => {
  it("counts messages inside the trailing second", () => {
    const m = new RateMeter();
    m.record(100);
    m.record(200);
    m.record(900);
    expect(m.rate(1000)).toBe(3);
  });

  it("decays to zero when traffic stops", () => {
    const m = new RateMeter();
    for (let i = 0; i < 50; i += 1) m.record(i * 10);
    expect(m.rate(500)).toBeGreaterThan(0);
    expect(m.rate(2000)).toBe(0);
  });

  it("tracks a saturated stream near link capacity", () => {
    const m = new RateMeter();
    // one message every 0.96 ms, the pace of a full serial link
    let t = 0;
    for (let i = 0; i < 2000; i += 1) {
      t = i * 0.96;
      m.record(t);
    }
    const r = m.rate(t);
    expect(r).toBeGreaterThanOrEqual(1030);
    expect(r).toBeLessThanOrEqual(1050);
  });

  it("drops only what left the window", () => {
    const m = new RateMeter();
    m.record(0);
    m.record(999);
    m.record(1001);
    expect(m.rate(1001)).toBe(2);
  });
});
