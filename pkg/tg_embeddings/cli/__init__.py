from .Cli import cli

__all__ = ["cli"]
