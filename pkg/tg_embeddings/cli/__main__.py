from .Cli import cli

cli(prog_name="tg-embed")
