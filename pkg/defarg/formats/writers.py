"""
Serializers: TGF and APX for argument graphs, DOT for argument and defense
graphs, plain text and JSON for results.

Every writer emits members in canonical order so that the same input always
produces the same bytes.
"""

import json
from functools import singledispatch
from typing import Iterable

from defarg.analysis.equivalence import (EquivalenceVerdict,
                                         ExtensionDifference,
                                         KernelDifference, ReasonDifference,
                                         ArgumentSetMismatch)
from defarg.commons.ordering import sorted_members
from defarg.formats.results import (ExtensionsResult,
                                    DefenseExtensionsResult, ReasonsResult)
from defarg.model.argument_graph import ArgumentGraph
from defarg.model.defense_graph import (DefenseGraph, DefenseNode, EMPTY,
                                        slot_sort_key)
from defarg.semantics.defense_semantics import CorrespondenceReport
from defarg.workflows.check_workflow import CheckReport


def write_tgf(graph: ArgumentGraph) -> str:
    """Serializes `graph` in Trivial Graph Format."""
    lines = list(graph.nodes)
    lines.append('#')
    lines.extend(f"{src} {dst}" for src, dst in sorted(graph.attacks))
    return '\n'.join(lines) + '\n'


def write_apx(graph: ArgumentGraph) -> str:
    """Serializes `graph` as ASPARTIX facts."""
    lines = [f"arg({a})." for a in graph.nodes]
    lines.extend(f"att({src},{dst})." for src, dst in sorted(graph.attacks))
    return '\n'.join(lines) + '\n'


def format_defense_node(node: DefenseNode) -> str:
    """Renders a defense as ``<x,b>`` and a defeater as ``(x,b)``."""
    return str(node)


def format_extension(extension: Iterable) -> str:
    """
    Renders an extension of arguments or of defenses as ``{m1,m2,...}``.

    Examples
    --------
    >>> format_extension({'c', 'a'})
    '{a,c}'
    """
    return '{' + ','.join(str(m) for m in sorted_members(extension)) + '}'


def format_reason_set(reason: Iterable) -> str:
    """Renders a reason set; the empty slot appears as ``EMPTY``."""
    return '{' + ','.join(str(m) for m in sorted(reason, key=slot_sort_key)) \
        + '}'


@singledispatch
def to_dot(graph) -> str:
    """
    Renders an argument graph or a defense graph in DOT.

    Defense graph nodes are labelled ``<x,b>`` for defenses and ``(x,b)``
    for defeaters, and defeaters are drawn as dashed boxes.
    """
    raise TypeError(f"Cannot render {type(graph).__name__} as DOT")


@to_dot.register
def _(graph: ArgumentGraph) -> str:
    lines = ['digraph F {']
    lines.extend(f'  "{a}";' for a in graph.nodes)
    lines.extend(f'  "{src}" -> "{dst}";' for src, dst in
                 sorted(graph.attacks))
    lines.append('}')
    return '\n'.join(lines) + '\n'


@to_dot.register
def _(dg: DefenseGraph) -> str:
    ids = {node: f"n{i}" for i, node in enumerate(dg.nodes)}
    lines = ['digraph DG {']
    for node in dg.nodes:
        shape = 'ellipse' if node.is_defense else 'box, style=dashed'
        lines.append(f'  {ids[node]} [label="{node}", shape={shape}];')
    for first, second in sorted(dg.edges,
                                key=lambda e: (e[0].sort_key, e[1].sort_key)):
        lines.append(f'  {ids[first]} -> {ids[second]};')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def _member(member):
    if isinstance(member, DefenseNode):
        return {'defender': str(member.defender),
                'defendee': member.defendee}
    return str(member)


def _extension(extension) -> list:
    return [_member(m) for m in sorted_members(extension)]


def _reason(reason) -> list:
    return [str(m) for m in sorted(reason, key=slot_sort_key)]


@singledispatch
def to_payload(result):
    """Converts a result into JSON-compatible data."""
    raise TypeError(f"Cannot serialize {type(result).__name__}")


@to_payload.register
def _(result: ExtensionsResult):
    return {'semantics': str(result.semantics),
            'extensions': [_extension(e) for e in result.extensions]}


@to_payload.register
def _(result: DefenseExtensionsResult):
    return {'semantics': str(result.semantics),
            'defense_extensions': [_extension(e) for e in result.extensions]}


@to_payload.register
def _(result: ReasonsResult):
    return {'argument': result.argument,
            'kind': str(result.kind),
            'semantics': str(result.semantics),
            'reasons': [_reason(r) for r in result.reasons]}


@to_payload.register
def _(dg: DefenseGraph):
    return {'nodes': [{**_member(n), 'kind': str(n.kind)} for n in dg.nodes],
            'edges': [[str(first), str(second)] for first, second in
                      sorted(dg.edges, key=lambda e: (e[0].sort_key,
                                                      e[1].sort_key))]}


@to_payload.register
def _(graph: ArgumentGraph):
    return {'arguments': list(graph.nodes),
            'attacks': [list(a) for a in sorted(graph.attacks)]}


@to_payload.register
def _(witness: ExtensionDifference):
    return {'extension': _extension(witness.extension),
            'in_first': witness.in_first}


@to_payload.register
def _(witness: KernelDifference):
    return {'only_first': [list(a) for a in sorted(witness.only_first)],
            'only_second': [list(a) for a in sorted(witness.only_second)],
            'arguments_only_first': sorted(witness.arguments_only_first),
            'arguments_only_second': sorted(witness.arguments_only_second)}


@to_payload.register
def _(witness: ReasonDifference):
    return {'argument': witness.argument,
            'first': [_reason(r) for r in witness.first],
            'second': [_reason(r) for r in witness.second]}


@to_payload.register
def _(witness: ArgumentSetMismatch):
    return {'extra': sorted(witness.extra),
            'missing': sorted(witness.missing)}


@to_payload.register
def _(verdict: EquivalenceVerdict):
    return {'kind': str(verdict.kind),
            'semantics': None if verdict.semantics is None
            else str(verdict.semantics),
            'result': verdict.result,
            'witness': None if verdict.witness is None
            else to_payload(verdict.witness)}


@to_payload.register
def _(report: CorrespondenceReport):
    def optional(witness):
        return None if witness is None else _extension(witness)

    return {'semantics': str(report.semantics),
            'forward_holds': report.forward_holds,
            'backward_holds': report.backward_holds,
            'argument_extensions': [_extension(e) for e in
                                    report.argument_extensions],
            'defense_extensions': [_extension(e) for e in
                                   report.defense_extensions],
            'forward_witness': optional(report.forward_witness),
            'backward_witness': optional(report.backward_witness)}


@to_payload.register
def _(report: CheckReport):
    return {'semantics': str(report.semantics),
            'passed': report.passed,
            'checks': [{'name': c.name, 'passed': c.passed,
                        'detail': c.detail} for c in report.checks]}


def to_json(result) -> str:
    """
    Serializes a result as JSON.

    Supported results are extension, defense extension and reason results,
    defense graphs, argument graphs, equivalence verdicts, correspondence
    reports and check reports. The empty slot is written as ``"EMPTY"``.

    Examples
    --------
    >>> from defarg.model.constants import Semantics
    >>> to_json(ExtensionsResult(Semantics.COMPLETE, (frozenset(),)))
    '{"semantics": "complete", "extensions": [[]]}'
    """
    return json.dumps(to_payload(result), ensure_ascii=True)


def format_text(result) -> str:
    """Renders a result in the line-oriented text format."""
    return _text(result)


@singledispatch
def _text(result) -> str:
    raise TypeError(f"Cannot render {type(result).__name__} as text")


@_text.register
def _(result: ExtensionsResult) -> str:
    return ''.join(format_extension(e) + '\n' for e in result.extensions)


@_text.register
def _(result: DefenseExtensionsResult) -> str:
    return ''.join(format_extension(e) + '\n' for e in result.extensions)


@_text.register
def _(result: ReasonsResult) -> str:
    return ''.join(format_reason_set(r) + '\n' for r in result.reasons)


@_text.register
def _(verdict: EquivalenceVerdict) -> str:
    label = 'equivalent' if verdict.result else 'not equivalent'
    if verdict.kind == 'summarization':
        label = 'summarization' if verdict.result else 'not a summarization'
    lines = [label]
    if verdict.witness is not None:
        lines.append(f"witness: {json.dumps(to_payload(verdict.witness))}")
    return '\n'.join(lines) + '\n'


@_text.register
def _(report: CheckReport) -> str:
    lines = []
    for check in report.checks:
        status = 'PASS' if check.passed else 'FAIL'
        lines.append(f"{status} {check.name}" +
                     (f" ({check.detail})" if check.detail else ''))
    return '\n'.join(lines) + '\n'
