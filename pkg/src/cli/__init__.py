"""Command-line surface: instance files, generators and corpus experiments."""

from src.cli.instance_io import Instance, dump_instance, load_instance, parse_instance
from src.cli.generators import GENERATORS, generate, parse_generator_spec

__all__ = [
    "Instance",
    "dump_instance",
    "load_instance",
    "parse_instance",
    "GENERATORS",
    "generate",
    "parse_generator_spec",
]
