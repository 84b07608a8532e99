#!/usr/bin/env python3
"""Write the crafted C fixture corpus used by the extraction golden suite.

Run once from the repo root; the outputs under test-data/fixtures/ are
committed and hand-verified, so regenerate only when adding cases.
"""

from pathlib import Path

FIXTURES = {
    "01_single_basic.c": (
        "// init counter\n"
        "int c = 0;\n"
    ),
    "02_single_trailing.c": (
        "int y = 1; // tracks retries\n"
        "f(y);\n"
    ),
    "03_multi_basic.c": (
        "/* a\n"
        " * b */\n"
        "int x;\n"
    ),
    "04_multi_inline.c": (
        "int x = /* inline note */ 5;\n"
        "use(x);\n"
    ),
    "05_string_with_slashes.c": (
        "char* s = \"// not a comment\";\n"
        "int after = 1;\n"
    ),
    "06_string_with_block.c": (
        "char* t = \"/* also not a comment */\";\n"
        "// real comment about t\n"
        "print(t);\n"
    ),
    "07_char_literals.c": (
        "char slash = '/';\n"
        "char star = '*';\n"
        "char quote = '\"';\n"
        "// after the literals\n"
        "done();\n"
    ),
    "08_escaped_quotes.c": (
        "char* s = \"he said \\\"hi\\\" // still a string\";\n"
        "// escape survivor\n"
        "use(s);\n"
    ),
    "09_continuation_comment.c": (
        "int y = 1; // trailing\\\n"
        " still comment\n"
        "f();\n"
    ),
    "10_continuation_string.c": (
        "char* s = \"split \\\n"
        "// not a comment\";\n"
        "int after = 2;\n"
    ),
    "11_unterminated_comment.c": (
        "int before = 1;\n"
        "/* this never closes\n"
        " * still inside\n"
    ),
    "12_unterminated_string.c": (
        "char* s = \"oops no close\n"
        "int next = 3; // recovered line\n"
        "g(next);\n"
    ),
    "13_adjacent_merge.c": (
        "// first line of block\n"
        "// second line of block\n"
        "int merged = 1;\n"
    ),
    "14_adjacent_gap.c": (
        "// alpha note\n"
        "\n"
        "// beta note\n"
        "int separate = 2;\n"
    ),
    "15_trailing_never_merges.c": (
        "setup(); // trailing note\n"
        "// standalone note\n"
        "run();\n"
    ),
    "16_empty_comments.c": (
        "/**/\n"
        "//\n"
        "/* */\n"
        "int kept = 4; //\n"
        "// survivor\n"
        "tail();\n"
    ),
    "17_gutter_blank_interior.c": (
        "/*\n"
        " * first paragraph\n"
        " *\n"
        " * second paragraph\n"
        " */\n"
        "int doc = 5;\n"
    ),
    "18_context_blank_stop.c": (
        "// only sees one line\n"
        "int near = 1;\n"
        "\n"
        "int far = 2;\n"
    ),
    "19_context_limit.c": (
        "// window holds three lines\n"
        "int a1 = 1;\n"
        "int a2 = 2;\n"
        "int a3 = 3;\n"
        "int a4 = 4;\n"
    ),
    "20_context_skips_comments.c": (
        "// head note\n"
        "int first = 1;\n"
        "// interleaved note\n"
        "int second = 2;\n"
    ),
    "21_block_between_code.c": (
        "a(); /* between calls */ b();\n"
        "c();\n"
    ),
    "22_markers_inside_comments.c": (
        "/* outer // inner */\n"
        "int x1 = 1;\n"
        "// has /* opener inside\n"
        "int x2 = 2;\n"
    ),
    "23_preprocessor_if0.c": (
        "#if 0\n"
        "// disabled but extracted\n"
        "int dead = 1;\n"
        "#endif\n"
        "int alive = 2;\n"
    ),
    "24_crlf_lines.c": (
        "// crlf comment\r\n"
        "int w = 1;\r\n"
    ),
    "25_eof_no_newline.c": (
        "int z = 9;\n"
        "// final words"
    ),
    "26_backslash_string_end.c": (
        "char* p = \"ends with \\\\\";\n"
        "// after escape-heavy string\n"
        "use(p);\n"
    ),
    "27_multi_trailing_span.c": (
        "x(); /* spans\n"
        "two lines */\n"
        "y();\n"
    ),
    "28_only_code.c": (
        "int plain = 1;\n"
        "int code = 2;\n"
    ),
    "29_star_heavy.c": (
        "/**** decorated banner ****/\n"
        "int deco = 1;\n"
        "/* ** doubled gutter */\n"
        "int dbl = 2;\n"
    ),
    "30_mixed_realistic.c": (
        "#include <stdio.h>\n"
        "\n"
        "/* ring buffer of fixed capacity\n"
        " * not thread safe */\n"
        "struct ring {\n"
        "    int head; // next write slot\n"
        "    int tail;\n"
        "};\n"
        "\n"
        "// push one value\n"
        "// returns 0 when full\n"
        "int push(struct ring *r, int v) {\n"
        "    const char *msg = \"full // do not log\";\n"
        "    return 0; /* TODO: wrap */\n"
        "}\n"
    ),
}


def main() -> None:
    out_dir = Path(__file__).resolve().parents[1] / "test-data" / "fixtures"
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, content in FIXTURES.items():
        (out_dir / name).write_bytes(content.encode("utf-8"))
    print(f"wrote {len(FIXTURES)} fixtures to {out_dir}")


if __name__ == "__main__":
    main()
