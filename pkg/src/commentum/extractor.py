"""Line-aware C comment lexer and code-comment pair extraction.

A single character-level pass distinguishes code, string literals, char
literals, and both comment styles, so `//` or `/*` inside a literal (or
inside another comment) never opens a comment. Handled constructs:

  - escape sequences in string/char literals (\" \\ ...), including
    backslash-newline continuations inside literals
  - backslash-newline continuations inside `//` comments
  - unterminated block comments and string literals (flagged, not fatal)

No preprocessor expansion and no trigraphs: comments inside `#if 0`
blocks are still extracted.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field, replace
from enum import Enum


class CommentKind(str, Enum):
    SINGLE = "single"
    MULTI = "multi"


class Source(str, Enum):
    SEED = "seed"
    GENERATED = "generated"


@dataclass(frozen=True)
class RawComment:
    """One comment with markers stripped and 1-based line positions."""

    kind: CommentKind
    text: str
    line_start: int
    line_end: int
    trailing: bool  # code precedes the comment on line_start
    unterminated: bool = False  # EOF hit inside the comment


@dataclass(frozen=True)
class CodeCommentPair:
    """A comment plus the code context it documents; the unit of classification."""

    id: str
    repo_id: str
    path: str
    comment: RawComment
    code_context: str
    label: int | None = None  # 1 = Useful, 0 = Not Useful, None = unlabeled
    source: Source = Source.SEED
    generator: str | None = None


@dataclass(frozen=True)
class LexWarning:
    code: str  # "unterminated_comment" | "unterminated_string"
    line: int
    message: str


@dataclass
class LexResult:
    comments: list[RawComment]
    code_lines: dict[int, str]  # 1-based line -> non-comment characters
    comment_lines: set[int]  # lines covered by at least one comment
    n_lines: int
    warnings: list[LexWarning] = field(default_factory=list)


def pair_id(comment_text: str, code_context: str, path: str, line_start: int) -> str:
    """Deterministic pair identity: digest over text, context, path, start line."""
    h = hashlib.sha256()
    for part in (comment_text, code_context, path, str(line_start)):
        h.update(part.encode("utf-8"))
        h.update(b"\x00")
    return h.hexdigest()[:16]


def _strip_single(raw: str) -> str:
    """Text of a `//` comment: splice continuations, trim surrounding space."""
    return raw.replace("\\\r\n", "").replace("\\\n", "").strip()


def _strip_multi(raw: str) -> str:
    """Text of a `/* */` body: per-line gutter strip (whitespace + one `*`)."""
    lines = []
    for line in raw.splitlines():
        line = line.strip()
        if line.startswith("*"):
            line = line[1:].strip()
        lines.append(line)
    while lines and not lines[0]:
        lines.pop(0)
    while lines and not lines[-1]:
        lines.pop()
    return "\n".join(lines)


def lex_comments(content: str) -> LexResult:
    """Scan C source once, returning comments plus per-line code text."""
    comments: list[RawComment] = []
    warnings: list[LexWarning] = []
    code: dict[int, list[str]] = {}
    comment_lines: set[int] = set()

    n = len(content)
    i = 0
    line = 1

    def emit_code(ch: str) -> None:
        code.setdefault(line, []).append(ch)

    def line_has_code(ln: int) -> bool:
        return bool("".join(code.get(ln, ())).strip())

    while i < n:
        ch = content[i]

        if ch == "\n":
            line += 1
            i += 1
            continue

        if ch == "/" and i + 1 < n and content[i + 1] == "/":
            start_line = line
            trailing = line_has_code(line)
            i += 2
            buf: list[str] = []
            while i < n:
                c = content[i]
                if c == "\\" and i + 1 < n and content[i + 1] == "\n":
                    buf.append("\\\n")
                    i += 2
                    line += 1
                    continue
                if c == "\\" and i + 2 < n and content[i + 1] == "\r" and content[i + 2] == "\n":
                    buf.append("\\\r\n")
                    i += 3
                    line += 1
                    continue
                if c == "\n":
                    break  # newline stays for the main loop
                buf.append(c)
                i += 1
            text = _strip_single("".join(buf).rstrip("\r"))
            comment_lines.update(range(start_line, line + 1))
            if text:
                comments.append(RawComment(CommentKind.SINGLE, text, start_line, line, trailing))
            continue

        if ch == "/" and i + 1 < n and content[i + 1] == "*":
            start_line = line
            trailing = line_has_code(line)
            i += 2
            buf = []
            closed = False
            while i < n:
                if content[i] == "*" and i + 1 < n and content[i + 1] == "/":
                    i += 2
                    closed = True
                    break
                if content[i] == "\n":
                    line += 1
                buf.append(content[i])
                i += 1
            end_line = line
            if not closed:
                warnings.append(LexWarning(
                    "unterminated_comment", start_line,
                    f"block comment opened at line {start_line} never closed"))
                if buf and buf[-1] == "\n":  # EOF right after a newline
                    end_line = max(start_line, line - 1)
            text = _strip_multi("".join(buf))
            comment_lines.update(range(start_line, end_line + 1))
            if text:
                comments.append(RawComment(
                    CommentKind.MULTI, text, start_line, end_line, trailing,
                    unterminated=not closed))
            continue

        if ch == '"' or ch == "'":
            quote = ch
            start_line = line
            emit_code(ch)
            i += 1
            closed = False
            while i < n:
                c = content[i]
                if c == "\\" and i + 1 < n:
                    emit_code(c)
                    nxt = content[i + 1]
                    if nxt == "\n":
                        line += 1
                    emit_code(nxt)
                    i += 2
                    continue
                if c == "\n":
                    break  # literal may not span a raw newline
                emit_code(c)
                i += 1
                if c == quote:
                    closed = True
                    break
            if not closed:
                what = "string" if quote == '"' else "char"
                warnings.append(LexWarning(
                    "unterminated_string", start_line,
                    f"unterminated {what} literal at line {start_line}"))
            continue

        emit_code(ch)
        i += 1

    n_lines = line if content else 0
    code_text = {ln: "".join(chars).rstrip("\r") for ln, chars in code.items()}
    return LexResult(comments, code_text, comment_lines, n_lines, warnings)


def _context_for(comment: RawComment, lex: LexResult, context_lines: int) -> str:
    """Same-line code on the comment's own lines, then up to context_lines
    following code lines; a fully blank line ends the window."""
    parts: list[str] = []
    for ln in range(comment.line_start, comment.line_end + 1):
        text = lex.code_lines.get(ln, "")
        if text.strip():
            parts.append(text.rstrip())

    taken = 0
    ln = comment.line_end + 1
    while taken < context_lines and ln <= lex.n_lines:
        text = lex.code_lines.get(ln, "")
        has_code = bool(text.strip())
        if has_code:
            parts.append(text.rstrip())
            taken += 1
        elif ln not in lex.comment_lines:
            break  # blank line
        ln += 1
    return "\n".join(parts)


def _blank_lines(lex: LexResult) -> set[int]:
    blanks = set()
    for ln in range(1, lex.n_lines + 1):
        if ln in lex.comment_lines:
            continue
        if not lex.code_lines.get(ln, "").strip():
            blanks.add(ln)
    return blanks


def extract_pairs(
    content: str,
    path: str,
    repo_id: str = "",
    context_lines: int = 3,
    source: Source = Source.SEED,
) -> list[CodeCommentPair]:
    """Extract every comment of a file as a CodeCommentPair, ordered by line."""
    pairs, _ = extract_pairs_with_warnings(content, path, repo_id, context_lines, source)
    return pairs


def extract_pairs_with_warnings(
    content: str,
    path: str,
    repo_id: str = "",
    context_lines: int = 3,
    source: Source = Source.SEED,
) -> tuple[list[CodeCommentPair], list[LexWarning]]:
    if context_lines < 0:
        raise ValueError("context_lines must be >= 0")
    lex = lex_comments(content)
    pairs = []
    for comment in lex.comments:
        ctx = _context_for(comment, lex, context_lines)
        pairs.append(CodeCommentPair(
            id=pair_id(comment.text, ctx, path, comment.line_start),
            repo_id=repo_id,
            path=path,
            comment=comment,
            code_context=ctx,
            source=source,
        ))
    return pairs, lex.warnings


def merge_adjacent(
    pairs: list[CodeCommentPair],
    max_gap: int = 0,
    blank_lines: set[int] | None = None,
) -> list[CodeCommentPair]:
    """Merge runs of non-trailing single-line comments on adjacent lines.

    Comments merge when separated by at most max_gap blank lines. For
    max_gap > 0 the caller must supply the file's blank-line numbers so a
    gap of code lines is never mistaken for a blank gap; the default
    max_gap=0 needs line numbers only.
    """
    if max_gap > 0 and blank_lines is None:
        raise ValueError("max_gap > 0 requires blank_lines from the lexed file")

    def mergeable_gap(prev: CodeCommentPair, nxt: CodeCommentPair) -> bool:
        gap = nxt.comment.line_start - prev.comment.line_end - 1
        if gap < 0 or gap > max_gap:
            return False
        if gap == 0:
            return True
        between = range(prev.comment.line_end + 1, nxt.comment.line_start)
        return all(ln in blank_lines for ln in between)

    merged: list[CodeCommentPair] = []
    run: list[CodeCommentPair] = []

    def flush() -> None:
        if not run:
            return
        if len(run) == 1:
            merged.append(run[0])
        else:
            first, last = run[0], run[-1]
            text = "\n".join(p.comment.text for p in run)
            comment = replace(
                first.comment, text=text, line_end=last.comment.line_end)
            merged.append(replace(
                first,
                id=pair_id(text, last.code_context, first.path, comment.line_start),
                comment=comment,
                code_context=last.code_context,
            ))
        run.clear()

    for pair in pairs:
        c = pair.comment
        if c.kind is not CommentKind.SINGLE or c.trailing:
            flush()
            merged.append(pair)
            continue
        if run and not mergeable_gap(run[-1], pair):
            flush()
        run.append(pair)
    flush()
    return merged


def extract_file(
    content: str,
    path: str,
    repo_id: str = "",
    context_lines: int = 3,
    merge: bool = True,
    max_gap: int = 0,
    source: Source = Source.SEED,
) -> tuple[list[CodeCommentPair], list[LexWarning]]:
    """Full per-file pipeline: lex, build contexts, optionally merge runs."""
    lex = lex_comments(content)
    pairs = []
    for comment in lex.comments:
        ctx = _context_for(comment, lex, context_lines)
        pairs.append(CodeCommentPair(
            id=pair_id(comment.text, ctx, path, comment.line_start),
            repo_id=repo_id,
            path=path,
            comment=comment,
            code_context=ctx,
            source=source,
        ))
    if merge:
        pairs = merge_adjacent(pairs, max_gap, _blank_lines(lex))
    return pairs, lex.warnings
