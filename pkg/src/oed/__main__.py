"""Allow ``python -m oed``."""

from .cli import entry

entry()
