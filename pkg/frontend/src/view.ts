// DOM rendering for the single-card annotation screen.

import { SessionState } from "./controller.js";
import { escapeHtml, highlightC } from "./highlight.js";

export function render(root: HTMLElement, state: SessionState): void {
  const progress = state.progress
    ? `${state.progress.labeled} / ${state.progress.target}`
    : "…";

  if (state.phase === "error") {
    root.innerHTML = `
      <header class="bar"><span class="brand">commentum</span>
        <span class="progress">${progress}</span></header>
      <main class="banner error-banner">
        <p>Cannot reach the annotation service.</p>
        <p class="detail">${escapeHtml(state.errorMessage ?? "")}</p>
        <button id="retry">Retry</button>
      </main>`;
    return;
  }

  if (state.phase === "complete") {
    root.innerHTML = `
      <header class="bar"><span class="brand">commentum</span>
        <span class="progress">${progress}</span></header>
      <main class="banner">
        <h2>Session complete</h2>
        <p>All ${progress} labels are stored on the server. You can close
        this window; export the labeled set with <code>GET /export</code>
        or the CLI.</p>
      </main>`;
    return;
  }

  if (state.phase === "loading" || !state.card) {
    root.innerHTML = `
      <header class="bar"><span class="brand">commentum</span>
        <span class="progress">${progress}</span></header>
      <main class="banner"><p>Loading…</p></main>`;
    return;
  }

  const card = state.card;
  const disabled = state.busy ? "disabled" : "";
  root.innerHTML = `
    <header class="bar">
      <span class="brand">commentum</span>
      <span class="location">${escapeHtml(card.path)}:${card.line_start}</span>
      <span class="progress">pair ${card.position} of ${card.total} · labeled ${progress}</span>
    </header>
    <main class="card">
      <section class="comment-box">
        <h3>Comment <span class="kind">(${escapeHtml(card.kind)})</span></h3>
        <pre class="comment-text">${escapeHtml(card.comment)}</pre>
      </section>
      <section class="context-box">
        <h3>Code context</h3>
        <pre class="code-text"><code>${
          card.code_context ? highlightC(card.code_context) : "<em>(no code in window)</em>"
        }</code></pre>
      </section>
      <section class="actions">
        <button id="useful" class="useful" ${disabled}>Useful <kbd>U</kbd></button>
        <button id="not-useful" class="not-useful" ${disabled}>Not useful <kbd>N</kbd></button>
        <button id="toggle-guidelines" class="ghost" ${disabled}>Guidelines <kbd>G</kbd></button>
      </section>
      <aside id="guidelines" class="guidelines" hidden><pre></pre></aside>
    </main>`;
}
