"""
Readers for the Trivial Graph Format and the ASPARTIX fact format.

TGF lists one argument per line, a lone ``#``, then one ``src dst`` attack
per line. APX states ``arg(x).`` and ``att(x,y).`` facts with free spacing
and ``%`` line comments. Argument names are restricted to letters, digits
and underscores, and ``EMPTY`` is reserved.
"""

import logging
import re
import sys
from pathlib import Path
from typing import Dict, List, Tuple

from defarg.model.argument_graph import ArgumentGraph
from defarg.model.constants import (EMPTY_TOKEN, GRAPH_FORMATS,
                                    PORTABLE_ARGUMENT_NAME)
from defarg.model.exceptions import (DuplicateArgumentError,
                                     GraphSyntaxError, InvalidOptionError,
                                     MissingSeparatorError,
                                     UndeclaredEndpointError)

logger = logging.getLogger(__name__)

APX_FACT = re.compile(
    r'(?P<predicate>\w+)\s*\(\s*(?P<args>[^()]*?)\s*\)\s*\.')
APX_COMMENT = re.compile(r'%[^\n]*')


def _check_name(name: str, line: int):
    if not PORTABLE_ARGUMENT_NAME.fullmatch(name):
        raise GraphSyntaxError(f"invalid argument name {name!r}", line)
    if name == EMPTY_TOKEN:
        raise GraphSyntaxError(f"{EMPTY_TOKEN} is a reserved name", line)


def _build(arguments: Dict[str, int],
           attacks: List[Tuple[str, str, int]]) -> ArgumentGraph:
    for src, dst, line in attacks:
        for endpoint in (src, dst):
            if endpoint not in arguments:
                raise UndeclaredEndpointError(
                    f"attack ({src}, {dst}) mentions undeclared argument "
                    f"{endpoint!r}", line)
    graph = ArgumentGraph(arguments, [(src, dst) for src, dst, _ in attacks])
    logger.debug("Parsed %r", graph)
    return graph


def _declare(arguments: Dict[str, int], name: str, line: int):
    _check_name(name, line)
    if name in arguments:
        raise DuplicateArgumentError(
            f"argument {name!r} already declared on line {arguments[name]}",
            line)
    arguments[name] = line


def parse_tgf(text: str) -> ArgumentGraph:
    """
    Parses a graph in Trivial Graph Format.

    Parameters
    ----------
    text : str
        The document. Only the first token of an argument line and the first
        two tokens of an attack line are read; blank lines are ignored.

    Returns
    -------
    ArgumentGraph
        The parsed graph.

    Raises
    ------
    MissingSeparatorError
        If no line consists of a lone ``#``.
    UndeclaredEndpointError
        If an attack mentions an argument not listed before ``#``.
    DuplicateArgumentError
        If an argument is listed twice.
    GraphSyntaxError
        If an attack line has fewer than two tokens or a name is invalid.

    Examples
    --------
    >>> sorted(parse_tgf("a\\nb\\n#\\na b\\n").attacks)
    [('a', 'b')]
    """
    lines = text.splitlines()
    if not any(line.split() == ['#'] for line in lines):
        raise MissingSeparatorError("no '#' line separating arguments from "
                                    "attacks")
    arguments: Dict[str, int] = {}
    attacks: List[Tuple[str, str, int]] = []
    separated = False
    for number, line in enumerate(lines, start=1):
        tokens = line.split()
        if not tokens:
            continue
        if tokens == ['#']:
            if separated:
                raise GraphSyntaxError("second '#' separator", number)
            separated = True
        elif not separated:
            _declare(arguments, tokens[0], number)
        else:
            if len(tokens) < 2:
                raise GraphSyntaxError(
                    f"attack line needs two arguments: {line.strip()!r}",
                    number)
            attacks.append((tokens[0], tokens[1], number))
    return _build(arguments, attacks)


def parse_apx(text: str) -> ArgumentGraph:
    """
    Parses a graph in ASPARTIX format.

    Parameters
    ----------
    text : str
        The document: ``arg(x).`` and ``att(x,y).`` facts separated by any
        whitespace, with ``%`` starting a comment that runs to the end of
        the line.

    Returns
    -------
    ArgumentGraph
        The parsed graph.

    Raises
    ------
    GraphSyntaxError
        If the document contains anything but these two facts, or a name is
        invalid.
    UndeclaredEndpointError
        If an attack mentions an argument without an ``arg`` fact.
    DuplicateArgumentError
        If an argument is declared twice.
    """
    text = APX_COMMENT.sub('', text)
    arguments: Dict[str, int] = {}
    attacks: List[Tuple[str, str, int]] = []
    position = 0
    while True:
        while position < len(text) and text[position].isspace():
            position += 1
        if position == len(text):
            break
        number = text.count('\n', 0, position) + 1
        fact = APX_FACT.match(text, position)
        if fact is None:
            snippet = text[position:].split('\n', 1)[0]
            raise GraphSyntaxError(f"unexpected text {snippet!r}", number)
        predicate = fact.group('predicate')
        args = [a.strip() for a in fact.group('args').split(',')]
        if predicate == 'arg' and len(args) == 1:
            _declare(arguments, args[0], number)
        elif predicate == 'att' and len(args) == 2:
            for name in args:
                _check_name(name, number)
            attacks.append((args[0], args[1], number))
        else:
            raise GraphSyntaxError(f"unsupported fact {fact.group(0)!r}",
                                   number)
        position = fact.end()
    return _build(arguments, attacks)


PARSERS = {
    'tgf': parse_tgf,
    'apx': parse_apx,
}


def parse_graph(text: str, fmt: str) -> ArgumentGraph:
    """
    Parses `text` in the format named by `fmt` ('tgf' or 'apx').

    Raises
    ------
    InvalidOptionError
        If `fmt` names no supported format.
    """
    if fmt not in PARSERS:
        raise InvalidOptionError(f"Invalid input format: {fmt}. Must be one "
                                 f"of {sorted(PARSERS)}.")
    return PARSERS[fmt](text)


def detect_format(path: str) -> str:
    """
    Returns the graph format matching the suffix of `path`.

    Raises
    ------
    InvalidOptionError
        If the suffix matches no format.
    """
    suffix = Path(path).suffix.lower()
    for fmt, known in GRAPH_FORMATS.items():
        if suffix == known:
            return fmt
    suffixes = sorted(GRAPH_FORMATS.values())
    raise InvalidOptionError(f"Cannot detect the format of {path}; use one "
                             f"of the suffixes {suffixes} or pass a format "
                             f"explicitly.")


def load_graph(path: str, fmt: str | None = None) -> ArgumentGraph:
    """
    Reads and parses a graph file.

    Parameters
    ----------
    path : str
        The file path, or ``-`` for standard input.
    fmt : str, optional
        'tgf' or 'apx'. Default is None, meaning detection by suffix;
        standard input defaults to TGF.

    Raises
    ------
    OSError
        If the file cannot be read.
    GraphParseError
        If the content is not a valid document.
    """
    if path == '-':
        text = sys.stdin.read()
        fmt = fmt or 'tgf'
    else:
        fmt = fmt or detect_format(path)
        text = Path(path).read_text(encoding='utf-8')
    logger.debug("Loading %s as %s", path, fmt)
    return parse_graph(text, fmt)
