// Websocket client for the live bridge. Applies the panel-side invariants:
// change-only pre-filtering, a 100 Hz gesture throttle with a trailing send,
// drop-with-indication while disconnected, and automatic reconnection.

import {
  type OutboundFrame,
  type InboundMessage,
  gestureMessage,
  buttonMessage,
  modeMessage,
  parseFrame,
} from "./protocol.js";
import type { ConnectionStatus } from "./state.js";

export interface WebSocketLike {
  send(data: string): void;
  close(): void;
  onopen: ((ev?: unknown) => void) | null;
  onmessage: ((ev: { data: unknown }) => void) | null;
  onclose: ((ev?: unknown) => void) | null;
  onerror: ((ev?: unknown) => void) | null;
}

export interface BridgeClientOptions {
  url: string;
  socketFactory?: (url: string) => WebSocketLike;
  now?: () => number;
  reconnectDelayMs?: number;
  gestureIntervalMs?: number;
  onFrame?: (frame: OutboundFrame) => void;
  onStatusChange?: (status: ConnectionStatus) => void;
  onDrop?: (message: InboundMessage) => void;
}

function defaultFactory(url: string): WebSocketLike {
  return new WebSocket(url) as unknown as WebSocketLike;
}

export class BridgeClient {
  readonly url: string;
  droppedSends = 0;

  private factory: (url: string) => WebSocketLike;
  private now: () => number;
  private reconnectDelayMs: number;
  private gestureIntervalMs: number;
  private onFrame?: (frame: OutboundFrame) => void;
  private onStatusChange?: (status: ConnectionStatus) => void;
  private onDrop?: (message: InboundMessage) => void;

  private socket: WebSocketLike | null = null;
  private status: ConnectionStatus = "disconnected";
  private closedByUser = false;
  private reconnectTimer: ReturnType<typeof setTimeout> | null = null;

  // change-only mirrors of what the bridge last heard from us
  private sentGesture: [number, number, number] | null = null;
  private sentButtons: (boolean | null)[] = new Array(10).fill(null);
  private sentMode: boolean | null = null;

  // gesture throttle state
  private lastGestureSendMs = -Infinity;
  private pendingGesture: [number, number, number] | null = null;
  private trailingTimer: ReturnType<typeof setTimeout> | null = null;

  constructor(options: BridgeClientOptions) {
    this.url = options.url;
    this.factory = options.socketFactory ?? defaultFactory;
    this.now = options.now ?? (() => performance.now());
    this.reconnectDelayMs = options.reconnectDelayMs ?? 1000;
    this.gestureIntervalMs = options.gestureIntervalMs ?? 10;
    this.onFrame = options.onFrame;
    this.onStatusChange = options.onStatusChange;
    this.onDrop = options.onDrop;
  }

  connect(): void {
    this.closedByUser = false;
    this.open();
  }

  close(): void {
    this.closedByUser = true;
    if (this.reconnectTimer !== null) {
      clearTimeout(this.reconnectTimer);
      this.reconnectTimer = null;
    }
    if (this.trailingTimer !== null) {
      clearTimeout(this.trailingTimer);
      this.trailingTimer = null;
    }
    this.socket?.close();
    this.socket = null;
    this.setStatus("disconnected");
  }

  getStatus(): ConnectionStatus {
    return this.status;
  }

  /** Queue-free send of the full gesture pose, throttled and change-filtered. */
  sendGesture(squeeze: number, left: number, right: number): void {
    const msg = gestureMessage(squeeze, left, right);
    const triple: [number, number, number] = [msg.squeeze, msg.left, msg.right];
    if (this.sentGesture !== null && this.tripleEqual(triple, this.sentGesture)) return;
    if (this.status !== "connected") {
      this.drop(msg);
      return;
    }
    const now = this.now();
    if (now - this.lastGestureSendMs >= this.gestureIntervalMs) {
      this.transmitGesture(triple, now);
    } else {
      // hold the newest pose and flush it when the interval reopens, so the
      // final value of a fast drag always reaches the wire
      this.pendingGesture = triple;
      if (this.trailingTimer === null) {
        const wait = this.gestureIntervalMs - (now - this.lastGestureSendMs);
        this.trailingTimer = setTimeout(() => {
          this.trailingTimer = null;
          this.flushPendingGesture();
        }, wait);
      }
    }
  }

  sendButton(id: number, pressed: boolean): void {
    if (this.sentButtons[id] === pressed) return;
    const msg = buttonMessage(id, pressed);
    if (this.status !== "connected") {
      this.drop(msg);
      return;
    }
    this.socket!.send(JSON.stringify(msg));
    this.sentButtons[id] = pressed;
  }

  sendMode(pressed: boolean): void {
    if (this.sentMode === pressed) return;
    const msg = modeMessage(pressed);
    if (this.status !== "connected") {
      this.drop(msg);
      return;
    }
    this.socket!.send(JSON.stringify(msg));
    this.sentMode = pressed;
  }

  private tripleEqual(a: [number, number, number], b: [number, number, number]): boolean {
    return a[0] === b[0] && a[1] === b[1] && a[2] === b[2];
  }

  private transmitGesture(triple: [number, number, number], nowMs: number): void {
    this.socket!.send(JSON.stringify(gestureMessage(triple[0], triple[1], triple[2])));
    this.sentGesture = triple;
    this.lastGestureSendMs = nowMs;
    this.pendingGesture = null;
  }

  private flushPendingGesture(): void {
    if (this.pendingGesture === null) return;
    const triple = this.pendingGesture;
    this.pendingGesture = null;
    if (this.status !== "connected") {
      this.drop(gestureMessage(triple[0], triple[1], triple[2]));
      return;
    }
    if (this.sentGesture !== null && this.tripleEqual(triple, this.sentGesture)) return;
    this.transmitGesture(triple, this.now());
  }

  private drop(message: InboundMessage): void {
    this.droppedSends += 1;
    this.onDrop?.(message);
  }

  private setStatus(status: ConnectionStatus): void {
    if (status === this.status) return;
    this.status = status;
    this.onStatusChange?.(status);
  }

  private open(): void {
    this.setStatus("connecting");
    let socket: WebSocketLike;
    try {
      socket = this.factory(this.url);
    } catch {
      this.scheduleReconnect();
      return;
    }
    this.socket = socket;
    socket.onopen = () => {
      // a fresh bridge session starts with no memory of us
      this.sentGesture = null;
      this.sentButtons.fill(null);
      this.sentMode = null;
      this.lastGestureSendMs = -Infinity;
      this.setStatus("connected");
    };
    socket.onmessage = (ev) => {
      if (typeof ev.data !== "string") return;
      const frame = parseFrame(ev.data);
      if (frame !== null) this.onFrame?.(frame);
    };
    socket.onerror = () => {
      // close follows; nothing to do here
    };
    socket.onclose = () => {
      if (this.socket === socket) this.socket = null;
      this.setStatus("disconnected");
      this.scheduleReconnect();
    };
  }

  private scheduleReconnect(): void {
    if (this.closedByUser || this.reconnectTimer !== null) return;
    this.setStatus("disconnected");
    this.reconnectTimer = setTimeout(() => {
      this.reconnectTimer = null;
      if (!this.closedByUser) this.open();
    }, this.reconnectDelayMs);
  }
}
