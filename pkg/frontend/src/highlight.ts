// Minimal C syntax highlighting to HTML. The emitted markup's text
// content is byte-identical to the input: tokens are only wrapped in
// spans, never trimmed or rewritten.

const KEYWORDS = new Set([
  "auto", "break", "case", "char", "const", "continue", "default", "do",
  "double", "else", "enum", "extern", "float", "for", "goto", "if",
  "inline", "int", "long", "register", "restrict", "return", "short",
  "signed", "sizeof", "static", "struct", "switch", "typedef", "union",
  "unsigned", "void", "volatile", "while",
]);

// The final two alternatives are fallbacks; runs of plain punctuation
// must not swallow characters that open a string, comment, or directive.
const TOKEN = /("(?:\\.|[^"\\])*"?|'(?:\\.|[^'\\])*'?|\/\/[^\n]*|\/\*[\s\S]*?(?:\*\/|$)|[A-Za-z_][A-Za-z0-9_]*|\d[\dxXa-fA-F.uUlL]*|#\s*\w+|\n|[^\w\n"'/#]+|[\s\S])/g;

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function classify(token: string): string | null {
  if (token.startsWith("//") || token.startsWith("/*")) return "hl-comment";
  if (token.startsWith('"') || token.startsWith("'")) return "hl-string";
  if (token.startsWith("#")) return "hl-preproc";
  if (/^\d/.test(token)) return "hl-number";
  if (KEYWORDS.has(token)) return "hl-keyword";
  return null;
}

export function highlightC(code: string): string {
  let html = "";
  for (const match of code.matchAll(TOKEN)) {
    const token = match[0];
    const cls = classify(token);
    const escaped = escapeHtml(token);
    html += cls ? `<span class="${cls}">${escaped}</span>` : escaped;
  }
  return html;
}

/** Text content of highlighted markup; must invert highlightC exactly. */
export function stripMarkup(html: string): string {
  return html
    .replace(/<[^>]*>/g, "")
    .replace(/&lt;/g, "<")
    .replace(/&gt;/g, ">")
    .replace(/&quot;/g, '"')
    .replace(/&amp;/g, "&");
}
