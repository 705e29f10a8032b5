// Entry point: wire the state, bridge client, controls, and log together.

import { BridgeClient } from "./client.js";
import { buildControls } from "./controls.js";
import { EventLog } from "./log.js";
import { PanelState } from "./state.js";

const state = new PanelState();

const controlsRoot = document.getElementById("controls") as HTMLElement;
const logRoot = document.getElementById("log") as HTMLElement;

const log = new EventLog(logRoot, state);

const client = new BridgeClient({
  url: `ws://${location.host}/ws`,
  onFrame(frame) {
    if (frame.type === "midi") {
      log.onMidi(frame);
    } else if (frame.type === "stats") {
      log.onStats(frame);
    } else {
      console.warn("bridge error:", frame.message);
    }
  },
  onStatusChange(status) {
    log.showStatus(status);
  },
  onDrop() {
    log.noteDrop();
  },
});

buildControls(controlsRoot, state, client);
client.connect();

setInterval(() => log.tick(performance.now()), 250);
