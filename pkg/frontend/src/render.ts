// Pure view -> HTML string rendering. All probability text is inserted
// verbatim from service payloads; this module never formats a number.

import { AdaptiveAdvice, AdvanceAdvice, SessionState } from "./api.js";
import { sparklineSvg } from "./sparkline.js";
import { UiSessionView } from "./store.js";

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function fractionText(prob: { num: string; den: string; decimal: string }): string {
  return `${prob.num}/${prob.den} = ${prob.decimal}`;
}

export function renderSetupForm(): string {
  return `
<form id="setup-form" class="setup">
  <h2>New game</h2>
  <label>Deck
    <input name="deck" value="4x13" required>
    <small>comma list ("4,3,2") or replication ("4x13")</small>
  </label>
  <label>Rounds <input name="rounds" type="number" min="1" value="52" required></label>
  <label>Mode
    <select name="mode">
      <option value="adaptive" selected>adaptive (advised each round)</option>
      <option value="advance">advance (bids committed up front)</option>
    </select>
  </label>
  <label>Advance bid (optional)
    <input name="bid" placeholder="left empty: an optimal bid is chosen">
  </label>
  <label class="checkbox">
    <input name="standard" type="checkbox" checked> standard card names (A..K) for 13 values
  </label>
  <button type="submit">Start</button>
  <button type="button" id="preset-standard">Standard 52-card preset</button>
</form>`;
}

function renderCountChips(session: SessionState, highlight: Set<string>): string {
  const chips = session.labels
    .map((label) => {
      const count = session.counts[label];
      const classes = ["chip"];
      if (highlight.has(label)) {
        classes.push("advised");
      }
      if (count === 0) {
        classes.push("empty");
      }
      return (
        `<button type="button" class="${classes.join(" ")}" data-label="${esc(label)}">` +
        `${esc(label)}<span class="count">${count}</span></button>`
      );
    })
    .join("");
  return `<div class="chips">${chips}</div>`;
}

function renderWhatIf(advice: AdaptiveAdvice): string {
  const rows = advice.what_if
    .map(
      (entry) =>
        `<tr data-label="${esc(entry.label)}">` +
        `<td>${esc(entry.label)}</td>` +
        `<td class="prob">${esc(entry.prob.decimal)}</td>` +
        `<td class="frac">${esc(entry.prob.num)}/${esc(entry.prob.den)}</td></tr>`,
    )
    .join("");
  return `
<details class="what-if" open>
  <summary>What if I bid ... (value of bidding each label now, then playing greedily)</summary>
  <table><thead><tr><th>label</th><th>win prob</th><th>exact</th></tr></thead>
  <tbody>${rows}</tbody></table>
</details>`;
}

function renderAdvicePanel(view: UiSessionView): string {
  const advice = view.advice;
  if (!advice) {
    return "";
  }
  if (advice.mode === "advance") {
    const adv = advice as AdvanceAdvice;
    const remaining = Object.entries(adv.bid_remaining)
      .map(([label, n]) => `${esc(label)}&times;${n}`)
      .join(", ");
    return `
<section class="advice">
  <p>Committed bid next: <strong class="next-bid">${esc(adv.next_bid)}</strong></p>
  <p>Remaining bids: ${remaining}</p>
</section>`;
  }
  const adp = advice as AdaptiveAdvice;
  const warning = adp.warning
    ? `<p class="warning">${esc(adp.warning)}</p>`
    : "";
  return `
<section class="advice">
  <p>Advised bid${adp.optimal.length > 1 ? "s" : ""}:
    ${adp.optimal.map((l) => `<strong class="advised-label">${esc(l)}</strong>`).join(" ")}
  </p>
  ${warning}
  ${renderWhatIf(adp)}
</section>`;
}

function renderHistory(session: SessionState): string {
  if (session.history.length === 0) {
    return "";
  }
  const rows = session.history
    .map(
      (h, i) =>
        `<tr class="${h.survived ? "ok" : "lost"}"><td>${i + 1}</td>` +
        `<td>${esc(h.bid)}</td><td>${esc(h.drawn)}</td>` +
        `<td>${h.survived ? "survived" : "coincidence"}</td></tr>`,
    )
    .join("");
  return `
<details class="history" ${session.status === "in-play" ? "" : "open"}>
  <summary>History (${session.history.length} rounds)</summary>
  <table><thead><tr><th>#</th><th>bid</th><th>drawn</th><th></th></tr></thead>
  <tbody>${rows}</tbody></table>
</details>`;
}

function renderEndScreen(view: UiSessionView): string {
  const won = view.session.status === "won";
  return `
<section class="end ${won ? "won" : "lost"}">
  <h2>${won ? "You won!" : "Coincidence &mdash; you lost."}</h2>
  ${renderHistory(view.session)}
  ${sparklineSvg(view.probHistory)}
  <button type="button" id="new-game">New game</button>
</section>`;
}

function renderDrawForm(view: UiSessionView): string {
  const advice = view.advice;
  const defaultBid =
    advice?.mode === "advance"
      ? advice.next_bid
      : advice?.mode === "adaptive"
        ? advice.optimal[0]
        : view.session.labels[0];
  const drawable = view.session.labels.filter((l) => view.session.counts[l] > 0);
  const bidOptions = view.session.labels
    .map(
      (l) =>
        `<option value="${esc(l)}" ${l === defaultBid ? "selected" : ""}>${esc(l)}</option>`,
    )
    .join("");
  const drawnOptions = drawable
    .map((l) => `<option value="${esc(l)}">${esc(l)}</option>`)
    .join("");
  return `
<form id="draw-form" class="draw">
  <label>My bid <select name="bid">${bidOptions}</select></label>
  <label>Card drawn <select name="drawn">${drawnOptions}</select></label>
  <button type="submit">Record round</button>
</form>`;
}

export function renderApp(view: UiSessionView | null, error: string | null, busy: boolean): string {
  const banner = error
    ? `<div class="error">
         <span>${esc(error)}</span>
         <button type="button" id="retry">Dismiss</button>
       </div>`
    : "";
  if (!view) {
    return `${banner}${renderSetupForm()}`;
  }
  const session = view.session;
  if (session.status !== "in-play") {
    return `${banner}${renderEndScreen(view)}`;
  }
  const advised =
    view.advice?.mode === "adaptive"
      ? new Set(view.advice.optimal)
      : view.advice?.mode === "advance"
        ? new Set([view.advice.next_bid])
        : new Set<string>();
  return `
${banner}
<section class="status">
  <p class="win-prob">Win probability:
    <strong class="prob">${esc(session.win_prob.decimal)}</strong>
    <span class="frac">(${esc(fractionText(session.win_prob))})</span>
  </p>
  <p>Round ${session.history.length + 1} &middot; ${session.rounds_left} rounds left</p>
  ${sparklineSvg(view.probHistory)}
</section>
${renderCountChips(session, advised)}
${renderAdvicePanel(view)}
${busy ? '<p class="busy">waiting for the service...</p>' : renderDrawForm(view)}
${renderHistory(session)}
<button type="button" id="abandon">Abandon game</button>`;
}
