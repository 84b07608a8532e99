// Bootstrap: wire the API, the session controller, the renderer, and the
// keyboard shortcuts. The service base URL defaults to the page's own
// origin and can be overridden with ?api=http://host:port.

import { AnnotationApi } from "./api.js";
import { SessionController } from "./controller.js";
import { render } from "./view.js";

function apiBase(): string {
  const param = new URLSearchParams(window.location.search).get("api");
  return (param ?? window.location.origin).replace(/\/$/, "");
}

function init(): void {
  const root = document.getElementById("app");
  if (!root) return;

  const api = new AnnotationApi(apiBase());
  const controller = new SessionController(api, "web");
  let guidelinesText: string | null = null;
  let guidelinesOpen = false;

  controller.onChange((state) => {
    render(root, state);
    if (guidelinesOpen) void showGuidelines();
  });

  async function showGuidelines(): Promise<void> {
    const panel = document.getElementById("guidelines");
    if (!panel) return;
    if (guidelinesText === null) {
      try {
        guidelinesText = await api.guidelines();
      } catch {
        guidelinesText = "(guidelines unavailable)";
      }
    }
    const pre = panel.querySelector("pre");
    if (pre) pre.textContent = guidelinesText;
    panel.hidden = false;
  }

  root.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    const button = target.closest("button");
    if (!button) return;
    if (button.id === "useful") void controller.submit("useful");
    else if (button.id === "not-useful") void controller.submit("not_useful");
    else if (button.id === "retry") void controller.retry();
    else if (button.id === "toggle-guidelines") {
      guidelinesOpen = !guidelinesOpen;
      const panel = document.getElementById("guidelines");
      if (!guidelinesOpen && panel) panel.hidden = true;
      else void showGuidelines();
    }
  });

  document.addEventListener("keydown", (event) => {
    if (event.ctrlKey || event.metaKey || event.altKey) return;
    const key = event.key.toLowerCase();
    if (key === "u") {
      event.preventDefault();
      void controller.submit("useful");
    } else if (key === "n") {
      event.preventDefault();
      void controller.submit("not_useful");
    } else if (key === "g") {
      event.preventDefault();
      guidelinesOpen = !guidelinesOpen;
      const panel = document.getElementById("guidelines");
      if (!guidelinesOpen && panel) panel.hidden = true;
      else void showGuidelines();
    } else if (key === "r") {
      void controller.retry();
    }
  });

  void controller.start();
}

init();
