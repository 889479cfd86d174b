// DOM wiring: one store, one root element, re-render on every change.
// Every state change round-trips the service; there are no optimistic
// updates anywhere.

import { ApiClient } from "./api.js";
import { renderApp } from "./render.js";
import { GameSetup, SessionStore } from "./store.js";

const root = document.getElementById("app");
if (!root) {
  throw new Error("missing #app element");
}
const store = new SessionStore(new ApiClient(""));

function render(): void {
  root!.innerHTML = renderApp(store.view, store.error, store.busy);
}

store.subscribe(render);

function setupFromForm(form: HTMLFormElement): GameSetup {
  const data = new FormData(form);
  return {
    deckNotation: String(data.get("deck") ?? ""),
    rounds: Number(data.get("rounds") ?? 0),
    mode: data.get("mode") === "advance" ? "advance" : "adaptive",
    bidNotation: String(data.get("bid") ?? "") || undefined,
    standardLabels: data.get("standard") !== null,
  };
}

root.addEventListener("submit", (event) => {
  const form = event.target as HTMLFormElement;
  event.preventDefault();
  if (form.id === "setup-form") {
    void store.start(setupFromForm(form));
  } else if (form.id === "draw-form") {
    const data = new FormData(form);
    void store.recordDraw(String(data.get("bid")), String(data.get("drawn")));
  }
});

root.addEventListener("click", (event) => {
  const target = event.target as HTMLElement;
  const button = target.closest("button");
  if (!button) {
    return;
  }
  if (button.id === "new-game" || button.id === "abandon") {
    void store.discard();
  } else if (button.id === "retry") {
    store.error = null;
    render();
  } else if (button.id === "preset-standard") {
    const form = document.getElementById("setup-form") as HTMLFormElement;
    (form.elements.namedItem("deck") as HTMLInputElement).value = "4x13";
    (form.elements.namedItem("rounds") as HTMLInputElement).value = "52";
    (form.elements.namedItem("standard") as HTMLInputElement).checked = true;
  } else if (button.dataset.label) {
    // clicking a count chip preselects it as the bid
    const form = document.getElementById("draw-form");
    if (form) {
      const bid = (form as HTMLFormElement).elements.namedItem("bid") as HTMLSelectElement;
      bid.value = button.dataset.label;
    }
  }
});

render();
