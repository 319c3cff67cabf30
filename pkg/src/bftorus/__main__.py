"""``python -m bftorus`` entry point."""

from .cli import main

main()
