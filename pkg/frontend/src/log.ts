// Scrolling event log, link statistics readout, message-rate meter, and the
// connection banner.

import { renderEvent, type MidiFrame, type StatsFrame } from "./protocol.js";
import { RateMeter, SCROLLBACK_CAP, type ConnectionStatus, type PanelState } from "./state.js";

export class EventLog {
  readonly meter = new RateMeter();

  private state: PanelState;
  private now: () => number;
  private banner: HTMLElement;
  private list: HTMLElement;
  private rateText: HTMLElement;
  private rateBar: HTMLElement;
  private statsText: HTMLElement;
  private dropsText: HTMLElement;
  private capacity = 1041;
  private drops = 0;

  constructor(root: HTMLElement, state: PanelState, now: () => number = () => performance.now()) {
    this.state = state;
    this.now = now;
    const doc = root.ownerDocument;

    this.banner = doc.createElement("div");
    this.banner.className = "banner";
    root.append(this.banner);

    const meterBox = doc.createElement("div");
    meterBox.className = "meter";
    this.rateText = doc.createElement("span");
    this.rateText.className = "meter-text";
    const track = doc.createElement("div");
    track.className = "meter-track";
    this.rateBar = doc.createElement("div");
    this.rateBar.className = "meter-bar";
    track.append(this.rateBar);
    meterBox.append(this.rateText, track);
    root.append(meterBox);

    this.statsText = doc.createElement("div");
    this.statsText.className = "stats";
    root.append(this.statsText);

    this.dropsText = doc.createElement("div");
    this.dropsText.className = "drops";
    root.append(this.dropsText);

    this.list = doc.createElement("div");
    this.list.className = "event-log";
    root.append(this.list);

    this.showStatus("connecting");
    this.tick(this.now());
  }

  onMidi(frame: MidiFrame): void {
    const text = renderEvent(frame.bytes);
    this.state.pushLog({ t_us: frame.t_us, text });
    this.meter.record(this.now());

    const doc = this.list.ownerDocument;
    const line = doc.createElement("div");
    line.className = "event-line";
    line.textContent = text;
    this.list.append(line);
    while (this.list.childNodes.length > SCROLLBACK_CAP) {
      this.list.removeChild(this.list.firstChild as Node);
    }
    this.list.scrollTop = this.list.scrollHeight;
  }

  onStats(frame: StatsFrame): void {
    this.capacity = frame.capacity_msgs_per_sec;
    this.statsText.textContent =
      `sent ${frame.messages_sent}` +
      ` | coalesced ${frame.ccs_coalesced}` +
      ` | peak queue ${frame.peak_queue_depth}` +
      ` | peak ${frame.peak_msgs_per_sec}/s` +
      ` | capacity ${frame.capacity_msgs_per_sec}/s`;
  }

  /** Refresh the rolling rate readout; call a few times per second even when idle. */
  tick(nowMs: number): void {
    const rate = this.meter.rate(nowMs);
    this.rateText.textContent = `${rate} msg/s`;
    const frac = Math.min(1, rate / this.capacity);
    this.rateBar.style.width = `${(frac * 100).toFixed(1)}%`;
    this.rateBar.classList.toggle("saturated", frac >= 0.9);
  }

  showStatus(status: ConnectionStatus): void {
    this.state.status = status;
    this.banner.className = `banner banner-${status}`;
    if (status === "connected") {
      this.banner.textContent = "connected";
    } else if (status === "connecting") {
      this.banner.textContent = "connecting...";
    } else {
      this.banner.textContent = "disconnected, retrying; interactions are dropped";
    }
  }

  noteDrop(): void {
    this.drops += 1;
    this.dropsText.textContent = `${this.drops} interaction(s) dropped while disconnected`;
  }
}
