"""
Ideal-file input language and the command line.
"""

from .IdealFileParser import IdealFile, IdealFileParser, parse_ideal_file, read_ideal_file
from .IdealFileWriter import format_ideal_file
from .Commands import build_parser, main

__all__ = [
    'IdealFile', 'IdealFileParser', 'parse_ideal_file', 'read_ideal_file',
    'format_ideal_file', 'build_parser', 'main',
]
