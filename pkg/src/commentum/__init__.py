"""commentum: C code-comment extraction, labeling, and comment-quality classification."""

__version__ = "0.1.0"
