// Panel-side mirror of the controller pose plus connection and log state.

export const SCROLLBACK_CAP = 1000;
export const BUTTON_COUNT = 10;

export type ConnectionStatus = "connecting" | "connected" | "disconnected";

export interface LogEntry {
  t_us: number;
  text: string;
}

export type AxisName = "squeeze" | "left" | "right";

export class PanelState {
  squeeze = 0;
  left = 0;
  right = 0;
  buttons: boolean[] = new Array(BUTTON_COUNT).fill(false);
  mode = false;
  status: ConnectionStatus = "connecting";
  scrollback: LogEntry[] = [];

  setAxis(name: AxisName, value: number): void {
    const v = Math.min(1, Math.max(0, value));
    this[name] = v;
  }

  pushLog(entry: LogEntry): void {
    this.scrollback.push(entry);
    if (this.scrollback.length > SCROLLBACK_CAP) {
      this.scrollback.splice(0, this.scrollback.length - SCROLLBACK_CAP);
    }
  }
}

/** Sliding one-second message counter fed by local receipt times. */
export class RateMeter {
  private times: number[] = [];

  record(nowMs: number): void {
    this.times.push(nowMs);
  }

  /** Messages received in the second ending at nowMs. Idle meters decay to zero. */
  rate(nowMs: number): number {
    const cutoff = nowMs - 1000;
    let drop = 0;
    while (drop < this.times.length && this.times[drop] <= cutoff) drop += 1;
    if (drop > 0) this.times.splice(0, drop);
    return this.times.length;
  }
}
