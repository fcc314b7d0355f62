from app.cli.commands import CommandResult, build_parser, main, run

__all__ = ["CommandResult", "build_parser", "main", "run"]
