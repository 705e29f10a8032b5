// On-screen and keyboard controls. Ten performance buttons sit in two
// five-button hand groups, each mirrored by one keyboard row. The squeeze
// axis is a slider; the two rotation axes are draggable arc dials.

import type { BridgeClient } from "./client.js";
import type { PanelState, AxisName } from "./state.js";

export const LEFT_KEYS = ["KeyA", "KeyS", "KeyD", "KeyF", "KeyG"];
export const RIGHT_KEYS = ["KeyH", "KeyJ", "KeyK", "KeyL", "Semicolon"];
export const MODE_KEY = "Space";

const KEY_LABELS = ["A", "S", "D", "F", "G", "H", "J", "K", "L", ";"];

const KEY_TO_BUTTON: Record<string, number> = {};
LEFT_KEYS.forEach((code, i) => (KEY_TO_BUTTON[code] = i));
RIGHT_KEYS.forEach((code, i) => (KEY_TO_BUTTON[code] = 5 + i));

const SVG_NS = "http://www.w3.org/2000/svg";

// dials sweep 270 degrees, from 7:30 (value 0) clockwise to 4:30 (value 1)
const SWEEP_START_DEG = -135;
const SWEEP_DEG = 270;

/** Angle of a point around a center, degrees clockwise from twelve o'clock. */
export function pointToAngle(cx: number, cy: number, x: number, y: number): number {
  return (Math.atan2(x - cx, cy - y) * 180) / Math.PI;
}

export function angleToValue(deg: number): number {
  return Math.min(1, Math.max(0, (deg - SWEEP_START_DEG) / SWEEP_DEG));
}

export function valueToAngle(value: number): number {
  return SWEEP_START_DEG + Math.min(1, Math.max(0, value)) * SWEEP_DEG;
}

function polar(cx: number, cy: number, r: number, deg: number): [number, number] {
  const rad = (deg * Math.PI) / 180;
  return [cx + r * Math.sin(rad), cy - r * Math.cos(rad)];
}

export interface Controls {
  slider: HTMLInputElement;
  dials: { left: SVGSVGElement; right: SVGSVGElement };
  buttons: HTMLButtonElement[];
  modeButton: HTMLButtonElement;
  destroy(): void;
}

export function buildControls(root: HTMLElement, state: PanelState, client: BridgeClient): Controls {
  const doc = root.ownerDocument;

  function sendPose(): void {
    client.sendGesture(state.squeeze, state.left, state.right);
  }

  // squeeze slider
  const axes = doc.createElement("section");
  axes.className = "axes";
  const squeezeBox = doc.createElement("div");
  squeezeBox.className = "axis";
  const squeezeLabel = doc.createElement("label");
  squeezeLabel.textContent = "Squeeze";
  const slider = doc.createElement("input");
  slider.type = "range";
  slider.min = "0";
  slider.max = "1";
  slider.step = "0.001";
  slider.value = "0";
  slider.id = "squeeze";
  const squeezeReadout = doc.createElement("span");
  squeezeReadout.className = "readout";
  squeezeReadout.textContent = "0.00";
  slider.addEventListener("input", () => {
    state.setAxis("squeeze", parseFloat(slider.value));
    squeezeReadout.textContent = state.squeeze.toFixed(2);
    sendPose();
  });
  squeezeBox.append(squeezeLabel, slider, squeezeReadout);
  axes.append(squeezeBox);

  // rotation dials
  function buildDial(axis: AxisName, label: string): SVGSVGElement {
    const box = doc.createElement("div");
    box.className = "axis dial-box";
    const name = doc.createElement("label");
    name.textContent = label;
    const svg = doc.createElementNS(SVG_NS, "svg") as SVGSVGElement;
    svg.setAttribute("viewBox", "0 0 100 100");
    svg.setAttribute("class", `dial dial-${axis}`);
    const [ax, ay] = polar(50, 50, 40, SWEEP_START_DEG);
    const [bx, by] = polar(50, 50, 40, SWEEP_START_DEG + SWEEP_DEG);
    const track = doc.createElementNS(SVG_NS, "path");
    track.setAttribute("d", `M ${ax.toFixed(1)} ${ay.toFixed(1)} A 40 40 0 1 1 ${bx.toFixed(1)} ${by.toFixed(1)}`);
    track.setAttribute("class", "dial-track");
    const needle = doc.createElementNS(SVG_NS, "line");
    needle.setAttribute("x1", "50");
    needle.setAttribute("y1", "50");
    needle.setAttribute("class", "dial-needle");
    const readout = doc.createElement("span");
    readout.className = "readout";

    function render(): void {
      const value = state[axis];
      const [nx, ny] = polar(50, 50, 36, valueToAngle(value));
      needle.setAttribute("x2", nx.toFixed(1));
      needle.setAttribute("y2", ny.toFixed(1));
      readout.textContent = value.toFixed(2);
    }
    render();

    let dragging = false;
    function apply(e: { clientX: number; clientY: number }): void {
      const rect = svg.getBoundingClientRect();
      const cx = rect.left + rect.width / 2;
      const cy = rect.top + rect.height / 2;
      state.setAxis(axis, angleToValue(pointToAngle(cx, cy, e.clientX, e.clientY)));
      render();
      sendPose();
    }
    svg.addEventListener("pointerdown", (e) => {
      dragging = true;
      const p = e as PointerEvent;
      if (typeof svg.setPointerCapture === "function" && typeof p.pointerId === "number") {
        try {
          svg.setPointerCapture(p.pointerId);
        } catch {
          // capture is best-effort; dragging still works inside the element
        }
      }
      apply(p);
    });
    svg.addEventListener("pointermove", (e) => {
      if (dragging) apply(e as PointerEvent);
    });
    const stop = () => {
      dragging = false;
    };
    svg.addEventListener("pointerup", stop);
    svg.addEventListener("pointercancel", stop);

    svg.appendChild(track);
    svg.appendChild(needle);
    box.append(name, svg, readout);
    axes.append(box);
    return svg;
  }

  const dialLeft = buildDial("left", "Left rotation");
  const dialRight = buildDial("right", "Right rotation");
  root.append(axes);

  // hand groups
  const buttons: HTMLButtonElement[] = [];

  function press(i: number): void {
    if (state.buttons[i]) return;
    state.buttons[i] = true;
    buttons[i].classList.add("active");
    client.sendButton(i, true);
  }

  function release(i: number): void {
    if (!state.buttons[i]) return;
    state.buttons[i] = false;
    buttons[i].classList.remove("active");
    client.sendButton(i, false);
  }

  const hands = doc.createElement("section");
  hands.className = "hands";
  for (const [handName, first] of [
    ["left-hand", 0],
    ["right-hand", 5],
  ] as [string, number][]) {
    const hand = doc.createElement("div");
    hand.className = `hand ${handName}`;
    for (let k = 0; k < 5; k += 1) {
      const i = first + k;
      const b = doc.createElement("button");
      b.className = "perf-button";
      b.dataset.button = String(i);
      b.textContent = KEY_LABELS[i];
      b.addEventListener("pointerdown", () => press(i));
      b.addEventListener("pointerup", () => release(i));
      b.addEventListener("pointerleave", () => release(i));
      b.addEventListener("pointercancel", () => release(i));
      hand.append(b);
      buttons.push(b);
    }
    hands.append(hand);
  }
  root.append(hands);

  // mode button
  const modeButton = doc.createElement("button");
  modeButton.className = "mode-button";
  modeButton.textContent = "Mode";

  function pressMode(): void {
    if (state.mode) return;
    state.mode = true;
    modeButton.classList.add("active");
    client.sendMode(true);
  }

  function releaseMode(): void {
    if (!state.mode) return;
    state.mode = false;
    modeButton.classList.remove("active");
    client.sendMode(false);
  }

  modeButton.addEventListener("pointerdown", pressMode);
  modeButton.addEventListener("pointerup", releaseMode);
  modeButton.addEventListener("pointerleave", releaseMode);
  modeButton.addEventListener("pointercancel", releaseMode);
  root.append(modeButton);

  // keyboard rows mirror the hand groups
  function onKeyDown(e: KeyboardEvent): void {
    if (e.repeat) return;
    const i = KEY_TO_BUTTON[e.code];
    if (i !== undefined) {
      e.preventDefault();
      press(i);
    } else if (e.code === MODE_KEY) {
      e.preventDefault();
      pressMode();
    }
  }

  function onKeyUp(e: KeyboardEvent): void {
    const i = KEY_TO_BUTTON[e.code];
    if (i !== undefined) {
      e.preventDefault();
      release(i);
    } else if (e.code === MODE_KEY) {
      e.preventDefault();
      releaseMode();
    }
  }

  doc.addEventListener("keydown", onKeyDown as EventListener);
  doc.addEventListener("keyup", onKeyUp as EventListener);

  return {
    slider,
    dials: { left: dialLeft, right: dialRight },
    buttons,
    modeButton,
    destroy() {
      doc.removeEventListener("keydown", onKeyDown as EventListener);
      doc.removeEventListener("keyup", onKeyUp as EventListener);
    },
  };
}
