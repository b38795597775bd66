# Copyright (C) 2024 snake-qchar contributors
#
# This program is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License version 2 as published
# by the Free Software Foundation.
#
# This program is distributed in the hope that it will be useful, but
# WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the GNU General
# Public License for more details.
#
"""
Command line entry point.

Exit codes: 0 success, 1 input error, 2 domain refusal, 3 failed verification.
"""
import argparse
import logging
import sys

from .config import WORKERS
from .criteria import verify_thin_criteria
from .exceptions import DomainError, InputError, QCharError, VerificationFailure
from .lattice import AlgebraType, SpectralPoint
from .monomial import Monomial, QCharacter, check_monomial, format_monomial, is_dominant, parse_monomial
from .pathmodel import enum_paths
from .renderers import RENDERERS
from .sl2core import is_thin_sl2, qstring_decompose, sl2_char
from .snakes import (SnakeSeq, check_extended_snake, factored_qchar, family, highest_tuple, is_tame, lowest_tuple,
                     position_class, prime_split, snake_qchar, split_spectral_classes)
from .sweep import sweep_diagrams, sweep_snakes
from .tableaux import (SkewDiagram, diagram_dominant_monomial, dominant_tableau, enum_tableaux, format_letter,
                       related_generic, special_columns, tab_monomial)
from .utils import dump_json, read_json, setup_logging

logger = logging.getLogger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    """Reports bad flags as InputError so they share the exit code of other input errors."""

    def error(self, message):
        raise InputError(message)


def _common(parser, monomial_required=False, monomial=True):
    parser.add_argument('-t', '--type',
                        help="Algebra type, e.g. 'B3' or 'sl2'. Defaults to 'B2'.",
                        required=False, type=str, default='B2')
    if monomial:
        parser.add_argument('-m', '--monomial',
                            help="Monomial such as 'Y[3,1] Y[3,3]'.",
                            required=monomial_required, type=str)
    parser.add_argument('-w', '--workers',
                        help="Processes for the tuple enumeration. Defaults to QCHAR_WORKERS ({}).".format(WORKERS),
                        required=False, type=int, default=WORKERS)
    output = parser.add_mutually_exclusive_group()
    output.add_argument('--json', dest='json', action='store_true', default=True,
                        help="Print JSON (default).")
    output.add_argument('--text', dest='json', action='store_false',
                        help="Print plain text.")


def parse_parameter(argv=None) -> argparse.Namespace:
    parser = _ArgumentParser(
        prog='snake_qchar',
        description='Exact q-characters of type B extended snake modules.')
    commands = parser.add_subparsers(dest='command')

    qchar = commands.add_parser('qchar', help='q-character of L(m)')
    _common(qchar, monomial_required=True)
    qchar.add_argument('--factor',
                       help="Print the prime factors and their product.",
                       action='store_true', default=False)

    classify = commands.add_parser('classify', help='tameness and snake position of L(m)')
    _common(classify, monomial_required=True)

    tableaux = commands.add_parser('tableaux', help='tableaux of a super skew diagram')
    # --monomial is a mode flag here
    _common(tableaux, monomial=False)
    tableaux.add_argument('-d', '--diagram',
                          help="Diagram JSON file.",
                          required=True, type=str)
    mode = tableaux.add_mutually_exclusive_group()
    for flag in ('enumerate', 'dominant', 'monomial', 'reduce'):
        mode.add_argument('--' + flag, dest='mode', action='store_const', const=flag)

    verify = commands.add_parser('verify', help='check the thin character criteria')
    _common(verify, monomial_required=True)
    verify.add_argument('-a', '--against',
                        help="Candidate set: q-character JSON or a JSON list of monomial strings.",
                        required=False, type=str)

    render = commands.add_parser('render', help='draw paths or a tableau')
    _common(render)
    what = render.add_mutually_exclusive_group(required=True)
    what.add_argument('--paths', dest='what', action='store_const', const='paths')
    what.add_argument('--tableau', dest='what', action='store_const', const='tableau')
    render.add_argument('-o', '--owner',
                        help="Draw every path of the owner 'i,k'.",
                        required=False, type=str)
    render.add_argument('--lowest',
                        help="Draw the lowest instead of the highest tuple.",
                        action='store_true', default=False)
    render.add_argument('-d', '--diagram',
                        help="Diagram JSON file for --tableau.",
                        required=False, type=str)
    render.add_argument('--svg',
                        help="Write SVG to this file instead of ASCII to stdout.",
                        required=False, type=str)

    sweep = commands.add_parser('sweep', help='check every small extended snake or generic diagram')
    _common(sweep)
    sweep.add_argument('-l', '--length',
                       help="Maximal snake length. Defaults to QCHAR_SWEEP_LENGTH.",
                       required=False, type=int)
    sweep.add_argument('--width',
                       help="Level window. Defaults to QCHAR_SWEEP_WIDTH.",
                       required=False, type=int)
    sweep.add_argument('--diagrams',
                       help="Sweep generic diagrams through the tableau bijection instead.",
                       action='store_true', default=False)
    sweep.add_argument('--columns',
                       help="Maximal number of columns for --diagrams. Defaults to 3.",
                       required=False, type=int, default=3)
    sweep.add_argument('--boxes',
                       help="Maximal number of boxes for --diagrams. Defaults to 8.",
                       required=False, type=int, default=8)

    args = parser.parse_args(argv)

    #
    #    Post process arguments
    #
    if args.command is None:
        parser.error("a command is required: qchar, classify, tableaux, verify, render or sweep")
    if args.workers < 1:
        parser.error("workers MUST be >= 1")
    if args.command == 'tableaux' and args.mode is None:
        args.mode = 'dominant'
    if args.command == 'render':
        if args.what == 'paths' and not (args.monomial or args.owner):
            parser.error("--paths needs --monomial or --owner")
        if args.what == 'tableau' and not args.diagram:
            parser.error("--tableau needs --diagram")
    if args.command == 'sweep':
        for name in ('length', 'width', 'columns', 'boxes'):
            value = getattr(args, name)
            if value is not None and value < 1:
                parser.error("{} MUST be >= 1".format(name))

    logger.debug("Running '{}' with {}".format(args.command, vars(args)))
    return args


def _algebra(args) -> AlgebraType:
    return AlgebraType.parse(args.type)


def _monomial(args, algebra: AlgebraType) -> Monomial:
    return check_monomial(algebra, parse_monomial(args.monomial))


def _emit(args, document, text: str) -> None:
    if args.json:
        print(dump_json(document), end='')
    else:
        print(text)


def cmd_qchar(args) -> int:
    algebra = _algebra(args)
    m = _monomial(args, algebra)
    if algebra.sl2:
        character = sl2_char(m)
        _emit(args, character.to_json(), character.to_text())
        return 0
    if args.factor:
        factors, product = factored_qchar(algebra, m, args.workers)
        document = {'factors': [f.to_json() for f in factors], 'product': product.to_json()}
        text = '\n\n'.join(["# factor {}\n{}".format(t, f.to_text()) for t, f in enumerate(factors, 1)]
                           + ["# product\n{}".format(product.to_text())])
        _emit(args, document, text)
    else:
        character = snake_qchar(algebra, m, args.workers)
        _emit(args, character.to_json(), character.to_text())
    logger.info("q-character of {} computed".format(format_monomial(m)))
    return 0


def _pairs(s: SnakeSeq) -> list:
    pairs = []
    for a, b in s.pairs():
        c = position_class(s.algebra, a, b)
        pairs.append({'from': list(a), 'to': list(b), 'position': c.kind.value, 'shift': c.shift})
    return pairs


def cmd_classify(args) -> int:
    algebra = _algebra(args)
    m = _monomial(args, algebra)
    if algebra.sl2:
        if not is_dominant(m):
            raise DomainError("expected a dominant monomial, got {}".format(format_monomial(m)))
        tame = is_thin_sl2(m)
        strings = [[s.low, s.high] for s in qstring_decompose(m)]
        document = {'tame': tame, 'thin': tame, 'strings': strings}
        text = "tame={} thin={}\nstrings: {}".format(str(tame).lower(), str(tame).lower(), strings)
        _emit(args, document, text)
        return 0
    tame = is_tame(algebra, m)
    classes = []
    for shift, part in enumerate(split_spectral_classes(algebra, m)):
        if part.is_one():
            continue
        s = SnakeSeq.from_monomial(algebra, part)
        kind = family(s)
        entry = {'shift': shift, 'family': kind.value if kind else None, 'pairs': _pairs(s)}
        if kind is not None:
            entry['prime_factors'] = [format_monomial(f.monomial()) for f in prime_split(s)]
        classes.append(entry)
    document = {'tame': tame, 'thin': tame, 'classes': classes}
    lines = ["tame={} thin={}".format(str(tame).lower(), str(tame).lower())]
    for entry in classes:
        lines.append("class +{}: {}".format(entry['shift'], entry['family']))
        for pair in entry['pairs']:
            lines.append("  ({},{}) -> ({},{}): {}{}".format(
                *pair['from'], *pair['to'], pair['position'],
                '' if pair['shift'] is None else " sigma={}".format(pair['shift'])))
    _emit(args, document, '\n'.join(lines))
    return 0


def _read_diagram(filename: str) -> SkewDiagram:
    return SkewDiagram.from_json(read_json(filename))


def _tableau_json(tableau) -> dict:
    return {'columns': [[format_letter(a) for a in col] for col in tableau.columns],
            'monomial': tab_monomial(tableau).to_json()}


def cmd_tableaux(args) -> int:
    d = _read_diagram(args.diagram)
    ascii_renderer = RENDERERS['ascii']()
    if args.mode == 'enumerate':
        found = enum_tableaux(d)
        document = {'diagram': d.to_json(), 'tableaux': [_tableau_json(t) for t in found]}
        text = '\n'.join("{}    {}".format(t, format_monomial(tab_monomial(t))) for t in found)
        logger.info("{} tableaux of {}".format(len(found), d))
    elif args.mode == 'dominant':
        tableau = dominant_tableau(d)
        document = dict(_tableau_json(tableau), special_columns=sorted(special_columns(d)))
        text = "{}{}".format(ascii_renderer.render_tableau(tableau), format_monomial(tab_monomial(tableau)))
    elif args.mode == 'monomial':
        m = diagram_dominant_monomial(d)
        document = {'monomial': m.to_json(), 'text': format_monomial(m)}
        text = format_monomial(m)
    else:
        related = related_generic(d)
        document = dict(related.to_json(), boxes=related.n_boxes)
        text = "{} ({} boxes)".format(related, related.n_boxes)
    _emit(args, document, text)
    return 0


def _candidates(filename: str) -> list:
    document = read_json(filename)
    if isinstance(document, list):
        return [parse_monomial(text) for text in document]
    return list(QCharacter.from_json(document).support())


def cmd_verify(args) -> int:
    algebra = _algebra(args)
    m = _monomial(args, algebra)
    if args.against:
        monomials = _candidates(args.against)
    else:
        monomials = snake_qchar(algebra, m, args.workers).support()
    verdict = verify_thin_criteria(algebra, m, monomials)
    _emit(args, verdict.to_json(), str(verdict))
    if not verdict.passed:
        raise VerificationFailure(verdict)
    return 0


def _owner(text: str) -> SpectralPoint:
    try:
        i, k = (int(v) for v in text.split(','))
    except ValueError as err:
        raise InputError("owner must look like 'i,k', got '{}'".format(text)) from err
    return SpectralPoint(i, k)


def cmd_render(args) -> int:
    renderer = RENDERERS['svg' if args.svg else 'ascii']()
    if args.what == 'paths':
        algebra = _algebra(args)
        if args.owner:
            paths = enum_paths(algebra, _owner(args.owner))
        else:
            s = check_extended_snake(SnakeSeq.from_monomial(algebra, _monomial(args, algebra)))
            paths = lowest_tuple(s) if args.lowest else highest_tuple(s)
        document = renderer.render_paths(algebra, paths)
    else:
        document = renderer.render_tableau(dominant_tableau(_read_diagram(args.diagram)))
    if args.svg:
        try:
            with open(args.svg, 'wt') as f:
                f.write(document)
        except OSError as err:
            raise InputError("Could not write '{}': {}".format(args.svg, err)) from err
        logger.info("Wrote {}".format(args.svg))
    else:
        print(document, end='')
    return 0


def cmd_sweep(args) -> int:
    algebra = _algebra(args)
    if args.diagrams:
        count, failure = sweep_diagrams(algebra.rank, args.columns, args.boxes, args.workers)
        subject = 'diagrams'
    else:
        options = {name: getattr(args, option) for name, option in (('max_length', 'length'), ('width', 'width'))
                   if getattr(args, option) is not None}
        count, failure = sweep_snakes(algebra.rank, workers=args.workers, **options)
        subject = 'snakes'
    document = {'checked': count, 'subject': subject, 'passed': failure is None}
    text = "checked {} {}: {}".format(count, subject, 'pass' if failure is None else 'fail')
    if failure is not None:
        item, verdict = failure
        document['failure'] = {'item': str(item), 'verdict': verdict.to_json()}
        text = "{}\n{}: {}".format(text, item, verdict)
    _emit(args, document, text)
    if failure is not None:
        raise VerificationFailure(failure[1])
    return 0


COMMANDS = {
    'qchar': cmd_qchar,
    'classify': cmd_classify,
    'tableaux': cmd_tableaux,
    'verify': cmd_verify,
    'render': cmd_render,
    'sweep': cmd_sweep,
}


def main(argv=None) -> int:
    """
    Run one command.

    :param argv: arguments without the program name, defaults to sys.argv[1:]
    :return: exit code
    """
    setup_logging()
    try:
        args = parse_parameter(argv)
        return COMMANDS[args.command](args)
    except VerificationFailure as err:
        logger.error("Verification failed: {}".format(err))
        return err.exit_code
    except QCharError as err:
        logger.warning("{}: {}".format(type(err).__name__, err))
        print(err, file=sys.stderr)
        return err.exit_code
