"""Regex-based C comment finder, independent of the package's scanner.

Used as the count-conservation oracle: one regex pass alternates comments
against string/char literals so earliest-match semantics mirror a real
lexer's first-delimiter-wins rule, without sharing any code with the
implementation under test.
"""

import re

TOKEN = re.compile(
    r"//(?:\\\r?\n|[^\n])*"      # single-line, backslash-newline continues
    r"|/\*[\s\S]*?\*/"           # block comment
    r"|/\*[\s\S]*$"              # unterminated block comment at EOF
    r"|\"(?:\\[\s\S]|[^\"\\\n])*\"?"  # string literal (maybe unterminated)
    r"|'(?:\\[\s\S]|[^'\\\n])*'?"     # char literal (maybe unterminated)
)


def find_comments(content: str) -> list[str]:
    """Raw text of every comment token, in source order."""
    out = []
    for match in TOKEN.finditer(content):
        tok = match.group(0)
        if tok.startswith("//") or tok.startswith("/*"):
            out.append(tok)
    return out


def comment_text(token: str) -> str:
    """Marker-stripped text, mirroring the documented cleanup rules."""
    if token.startswith("//"):
        body = token[2:]
        body = re.sub(r"\\\r?\n", "", body)
        return body.strip()
    body = token[2:]
    if body.endswith("*/"):
        body = body[:-2]
    lines = []
    for line in body.splitlines():
        line = line.strip()
        if line.startswith("*"):
            line = line[1:].strip()
        lines.append(line)
    while lines and not lines[0]:
        lines.pop(0)
    while lines and not lines[-1]:
        lines.pop()
    return "\n".join(lines)


def count_nonempty_comments(content: str) -> int:
    return sum(1 for tok in find_comments(content) if comment_text(tok))
