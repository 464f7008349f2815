"""
SPDX-License-Identifier: LGPL-2.1

Copyright 2026 The weightcruncher developers

Command-line front end.
"""

import argparse
import logging
import math
import sys
from fractions import Fraction

from . import bounds
from . import cdc as cd
from . import codec
from . import fdtw
from . import verify
from .errors import cap_exceeded, code_format_error, decoding_failure, verification_error
from .field import build_field

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3
EXIT_DECODE = 4

log = logging.getLogger('weightcruncher')


def parse_word(text, N):
    """
    Parse a binary word of length N, given either as comma-separated support
    positions or as a hexadecimal bitmap prefixed with '0x' (the most
    significant bit is position 0).
    """
    text = text.strip()
    if text.lower().startswith('0x'):
        digits = -(-N // 4)
        hexpart = text[2:]
        if len(hexpart) != digits:
            raise ValueError('Expected {0} hex digits for length {1}, got \'{2}\''.format(
                             digits, N, hexpart))

        value = int(hexpart, 16)
        bits = 4 * digits
        if value & ((1 << (bits - N)) - 1):
            raise ValueError('Hex word \'{0}\' has bits beyond length {1}'.format(text, N))

        return fdtw.wc_word(N, [p for p in range(N) if value >> (bits - 1 - p) & 1])

    if text in ('', '-'):
        return fdtw.wc_word(N, [])

    return fdtw.wc_word(N, [int(p) for p in text.split(',')])


def emit_word(word, form='supports'):
    """
    Format a binary word as a support list or as a hexadecimal bitmap.

    The support form lists the positions of the ones, comma separated, and
    '-' for the zero word. The hex form reads the word as a bitmap with
    position 0 as the most significant bit, padded to ceil(N/4) digits. The
    '0x' prefix is what lets `parse_word` tell the two forms apart. For
    N = 8, the support 0,3 is written 0x90.
    """
    if form == 'hex':
        digits = -(-word.N // 4)
        bits = 4 * digits
        value = 0
        for p in word.support:
            value |= 1 << (bits - 1 - p)

        return '0x{0:0{1}x}'.format(value, digits) if digits else '0x'

    if form != 'supports':
        raise ValueError('Unknown word format \'{0}\''.format(form))

    return ','.join(str(p) for p in word.support) or '-'


class wc_pipeline_config:
    """
    A validated description of one command-line run.

    Attributes
    ----------
    command : string
        The subcommand.
    field : tuple
        (q, n, poly) of the field; n and poly may be None.
    source : dictionary
        'kind' ('spread', 'grassmannian', 'lemma1', 'search', 'file' or
        None) and its parameters.
    action : dictionary
        Parameters of the subcommand.
    outputs : dictionary
        Output paths ('out', 'out_cdc').
    """
    def __init__(self, command, field=None, source=None, action=None, outputs=None,
                 verify=True, form='supports'):
        """ Constructor.
        """
        self.command = command
        self.field = field or (2, None, None)
        self.source = source or {'kind': None}
        self.action = action or {}
        self.outputs = outputs or {}
        self.verify = verify
        self.form = form
        self.validate()

    def validate(self):
        """ Check that the subcommand has the source and parameters it needs.
        """
        kind = self.source['kind']
        n = self.field[1]
        if self.command in ('construct', 'encode', 'decode', 'correct') and kind is None:
            raise ValueError('\'{0}\' needs a code source'.format(self.command))

        if kind in ('spread', 'grassmannian', 'search'):
            if n is None or self.source.get('k') is None:
                raise ValueError('--{0} needs --n and --k'.format(kind))

        if kind == 'search' and self.source.get('d') is None:
            raise ValueError('--search needs --d')

        if kind == 'lemma1' and n is not None and n != 2 * self.source['m'] - 1:
            raise ValueError('--lemma1 {0} builds a code in F_q^{1}, not F_q^{2}'.format(
                             self.source['m'], 2 * self.source['m'] - 1, n))

        if self.command in ('shorten', 'verify', 'ooc') and not self.action.get('input'):
            raise ValueError('\'{0}\' needs --in'.format(self.command))


def config_from_args(args):
    """ Build a wc_pipeline_config from parsed arguments.
    """
    ns = vars(args)
    source = {'kind': None}
    if ns.get('spread'):
        source = {'kind': 'spread', 'k': args.k}
    elif ns.get('grassmannian'):
        source = {'kind': 'grassmannian', 'k': args.k}
    elif ns.get('lemma1') is not None:
        source = {'kind': 'lemma1', 'm': args.lemma1}
    elif ns.get('search'):
        source = {'kind': 'search', 'k': args.k, 'd': args.d, 'seed': args.seed}
    elif ns.get('file'):
        source = {'kind': 'file', 'path': args.file}

    if args.command == 'bounds':
        action = {key: val for key, val in ns.items() if key not in ('command', 'verbose')}
        return wc_pipeline_config('bounds', action=action)

    skip = ('command', 'q', 'n', 'poly', 'k', 'd', 'seed', 'spread', 'grassmannian', 'lemma1',
            'search', 'file', 'out', 'out_cdc', 'no_verify', 'format', 'verbose')
    action = {key: val for key, val in ns.items() if key not in skip}

    return wc_pipeline_config(args.command,
                              field=(ns.get('q', 2), ns.get('n'), ns.get('poly')),
                              source=source,
                              action=action,
                              outputs={'out': ns.get('out'), 'out_cdc': ns.get('out_cdc')},
                              verify=not ns.get('no_verify', False),
                              form=ns.get('format') or 'supports')


def build_source(config):
    """ The constant dimension code described by a configuration.
    """
    q, n, poly = config.field
    src = config.source
    kind = src['kind']
    progress = config.action.get('progress', False)
    log.debug('building %s source', kind)
    if kind == 'file':
        return cd.load_code(src['path'], progress=progress)

    if kind == 'lemma1':
        return cd.lemma1_code(src['m'], q, poly=poly, progress=progress)

    ctx = build_field(q, n, poly=poly)
    if kind == 'spread':
        return cd.spread(ctx, src['k'], progress=progress)

    if kind == 'grassmannian':
        return cd.full_grassmannian(ctx, src['k'], progress=progress)

    if kind == 'search':
        return cd.greedy_search(ctx, src['k'], src['d'], order_seed=src.get('seed'),
                                progress=progress)

    raise ValueError('Unknown source \'{0}\''.format(kind))


def _field_comments(source):
    q, n, poly = source.ctx.descriptor()
    return ['field q={0} n={1} poly={2}'.format(q, n, ','.join(str(c) for c in poly)),
            'source {0} k={1} d={2} size={3}'.format(source.tag, source.k, source.declared_d,
                                                    len(source))]


def _check_distance(config, code):
    pairs = len(code) * (len(code) - 1) // 2
    if len(code) < 2:
        return EXIT_OK

    if not config.verify and pairs > cd.PAIR_CAP:
        log.warning('distance of %s not verified', code)
        return EXIT_OK

    report = verify.distance_report(code)
    print('verify: {0}'.format(report))
    return EXIT_OK if report.ok else EXIT_VERIFY


def _write_code(config, code, comments=None):
    out = config.outputs.get('out')
    if out:
        fdtw.save_code(code, out, comments=comments)
        log.info('wrote %s to %s', code, out)
    else:
        for c in code:
            print(emit_word(c, config.form))


def _run_construct(config):
    source = build_source(config)
    print('source: {0}'.format(source))
    code = fdtw.fdtw_construct(source)
    print('construct: {0}, predicted (N, d, w, size) = {1}'.format(
          code, fdtw.predicted_params(source)))

    shorten = config.action.get('shorten')
    if shorten:
        code = fdtw.shorten(code, shorten[0], shorten[1])
        print('shorten: {0}'.format(code))

    if config.action.get('pad_hadamard'):
        code = fdtw.pad_hadamard(code)
        print('pad: {0}'.format(code))

    status = _check_distance(config, code)
    if status != EXIT_OK:
        return status

    if config.outputs.get('out_cdc'):
        cd.save_code(source, config.outputs['out_cdc'])

    _write_code(config, code, comments=_field_comments(source))
    return EXIT_OK


def _run_shorten(config):
    code = fdtw.load_code(config.action['input'])
    short = fdtw.shorten(code, config.action['coord'], config.action['bit'])
    print('shorten: {0}'.format(short))
    _write_code(config, short)
    return EXIT_OK


def _run_verify(config):
    code = fdtw.load_code(config.action['input'])
    status = EXIT_OK
    if config.action.get('distance'):
        report = verify.distance_report(code)
        print('verify: {0}'.format(report))
        if not report.ok:
            status = EXIT_VERIFY

    if config.action.get('steiner') is not None:
        t = config.action['steiner']
        ok, counter = verify.check_steiner(code, t)
        print('verify: steiner t={0} exhaustive: {1}'.format(t, 'ok' if ok else
                                                            'FAILED witness={0}'.format(counter)))
        if not ok:
            status = EXIT_VERIFY

    if config.action.get('cyclic'):
        ok = verify.is_cyclic(code)
        print('verify: cyclic exhaustive: {0}'.format('ok' if ok else 'FAILED'))
        if not ok:
            status = EXIT_VERIFY

    return status


def _run_ooc(config):
    code = fdtw.load_code(config.action['input'])
    ooc = verify.ooc_extract(code, lam_expected=config.action.get('lam'))
    print('ooc: {0}, {1} short orbit(s) discarded'.format(ooc, len(ooc.discarded)))
    reps = fdtw.wc_code(ooc.n, ooc.w, 2 * (ooc.w - ooc.lam), ooc.reps)
    _write_code(config, reps, comments=['ooc n={0} w={1} lambda={2}'.format(ooc.n, ooc.w,
                                                                           ooc.lam)])
    return EXIT_OK


def _run_encode(config):
    source = build_source(config)
    word = codec.encode(source, codec.wc_info_word(config.action['i'], config.action['j']))
    print(emit_word(word, config.form))
    return EXIT_OK


def _run_decode(config):
    source = build_source(config)
    info = codec.decode(source, parse_word(config.action['word'], source.ctx.size))
    print('{0} {1}'.format(info.i, info.j))
    return EXIT_OK


def _run_correct(config):
    source = build_source(config)
    word = codec.correct(source, parse_word(config.action['word'], source.ctx.size))
    print(emit_word(word, config.form))
    print('status: ok')
    return EXIT_OK


def _avz_witness(n, delta, w, M):
    b = bounds.avz_b(n, delta, w, M)
    if b <= 0:
        return 'M={0}: b={1} <= 0'.format(M, b)

    return 'excluded M={0}: b={1} floor(delta/b)={2}'.format(M, b,
                                                           math.floor(Fraction(delta) / b))


def _run_bounds(config):
    a = config.action
    name = a['bound']
    if name == 'gaussian':
        value = bounds.gaussian(a['n'], a['l'], a['q'])
        inputs = 'n={0}, l={1}, q={2}'.format(a['n'], a['l'], a['q'])
    elif name == 'johnson':
        value = bounds.johnson_step(a['n'], a['d'], a['w'], a['prev'])
        inputs = 'n={0}, d={1}, w={2}, prev={3}'.format(a['n'], a['d'], a['w'], a['prev'])
    elif name == 'avz':
        value = bounds.avz_bound(a['n'], a['delta'], a['w'], a['cap'])
        inputs = 'n={0}, delta={1}, w={2}, cap={3}'.format(a['n'], a['delta'], a['w'], a['cap'])
    elif name == 'eq2':
        value = bounds.eq2_lower_bound(a['n'], a['k'], a['q'])
        inputs = 'n={0}, k={1}, q={2}'.format(a['n'], a['k'], a['q'])
    elif name == 'fdtw-eq2':
        value = bounds.fdtw_size_from_eq2(a['n'], a['k'], a['q'])
        inputs = 'n={0}, k={1}, q={2}'.format(a['n'], a['k'], a['q'])
    elif name == 'theorem5':
        value = bounds.theorem5_values(a['m'])
        inputs = 'm={0}'.format(a['m'])
    elif name == 'steiner':
        value = bounds.steiner_size(a['t'], a['w'], a['n'])
        inputs = 't={0}, w={1}, n={2}'.format(a['t'], a['w'], a['n'])
    else:
        raise ValueError('Unknown bound \'{0}\''.format(name))

    print('{0}({1}) = {2}'.format(name, inputs, value))
    if name == 'avz' and value < a['cap']:
        print(_avz_witness(a['n'], a['delta'], a['w'], value + 1))

    return EXIT_OK


_commands = {
    'construct': _run_construct,
    'shorten': _run_shorten,
    'verify': _run_verify,
    'ooc': _run_ooc,
    'encode': _run_encode,
    'decode': _run_decode,
    'correct': _run_correct,
    'bounds': _run_bounds,
}


def run(config):
    """
    Execute a pipeline.

    Parameters
    ----------
    config : wc_pipeline_config
        The validated configuration.

    Returns
    -------
    status : int
        0 ok, 2 usage, 3 verification failure, 4 decode/correct failure.
    """
    try:
        return _commands[config.command](config)
    except verification_error as err:
        print('error: verification failed: {0}'.format(err), file=sys.stderr)
        return EXIT_VERIFY
    except decoding_failure as err:
        print('error: {0}'.format(err.reason), file=sys.stderr)
        log.debug('%s', err)
        return EXIT_DECODE
    except (ValueError, cap_exceeded, code_format_error, OSError) as err:
        print('error: {0}'.format(err), file=sys.stderr)
        return EXIT_USAGE


def _poly_arg(text):
    try:
        return tuple(int(c) for c in text.split(','))
    except ValueError as err:
        raise argparse.ArgumentTypeError('Malformed polynomial \'{0}\''.format(text)) from err


def _add_source_args(p, required):
    p.add_argument('--q', type=int, default=2, help='Prime base field size.')
    p.add_argument('--n', type=int, help='Dimension of the ambient space.')
    p.add_argument('--poly', type=_poly_arg,
                   help='Primitive polynomial, comma-separated coefficients, low-to-high.')
    p.add_argument('--k', type=int, help='Dimension of the codewords.')
    p.add_argument('--d', type=int, help='Minimum subspace distance (search).')
    p.add_argument('--seed', type=int, help='Scan order seed (search).')
    src = p.add_mutually_exclusive_group(required=required)
    src.add_argument('--spread', action='store_true', help='Spread of k-dimensional subspaces.')
    src.add_argument('--grassmannian', action='store_true', help='All k-dimensional subspaces.')
    src.add_argument('--lemma1', type=int, metavar='M', help='Lifted [2M-1, 2M-2, M] code.')
    src.add_argument('--search', action='store_true', help='Greedy search.')
    src.add_argument('--file', '--code', dest='file', metavar='PATH',
                     help='Constant dimension code file.')


def _add_output_args(p):
    p.add_argument('--out', help='Output code file.')
    p.add_argument('--format', choices=['supports', 'hex'], default='supports',
                   help='Word format on stdout.')


def make_parser():
    """ The argument parser of the weightcruncher command.
    """
    parser = argparse.ArgumentParser(prog='weightcruncher',
                                     description='Constant weight codes from constant '
                                                 'dimension codes.')
    parser.add_argument('-v', '--verbose', action='store_true')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('construct', help='Build, verify and write a constant weight code.')
    _add_source_args(p, required=True)
    _add_output_args(p)
    p.add_argument('--out-cdc', help='Also write the source constant dimension code.')
    p.add_argument('--shorten', type=int, nargs=2, metavar=('I', 'B'),
                   help='Shorten at coordinate I keeping bit B.')
    p.add_argument('--pad-hadamard', action='store_true',
                   help='Join the all-zero and all-one words.')
    p.add_argument('--no-verify', action='store_true',
                   help='Skip distance verification above the pair cap.')
    p.add_argument('--progress', action='store_true',
                   help='Show progress bars while building and verifying the source.')

    p = sub.add_parser('shorten', help='Shorten a code file.')
    p.add_argument('--in', dest='input', required=True)
    p.add_argument('--coord', type=int, required=True)
    p.add_argument('--bit', type=int, choices=[0, 1], required=True)
    _add_output_args(p)

    p = sub.add_parser('verify', help='Verify a code file.')
    p.add_argument('--in', dest='input', required=True)
    p.add_argument('--distance', action='store_true')
    p.add_argument('--steiner', type=int, metavar='T')
    p.add_argument('--cyclic', action='store_true')

    p = sub.add_parser('ooc', help='Optical orthogonal code of a cyclic code file.')
    p.add_argument('--in', dest='input', required=True)
    p.add_argument('--lam', type=int)
    _add_output_args(p)

    p = sub.add_parser('encode', help='Encode an information word (i, j).')
    _add_source_args(p, required=True)
    p.add_argument('--i', type=int, required=True)
    p.add_argument('--j', type=int, required=True)
    p.add_argument('--format', choices=['supports', 'hex'], default='supports')

    for name in ('decode', 'correct'):
        p = sub.add_parser(name, help='{0} a received word.'.format(name.capitalize()))
        _add_source_args(p, required=True)
        p.add_argument('--word', required=True,
                       help='Support list \'0,3,5\' or hex bitmap \'0x...\'.')
        p.add_argument('--format', choices=['supports', 'hex'], default='supports')

    p = sub.add_parser('bounds', help='Evaluate a bound.')
    bsub = p.add_subparsers(dest='bound', required=True)
    b = bsub.add_parser('gaussian')
    for arg in ('n', 'l', 'q'):
        b.add_argument('--' + arg, type=int, required=True)
    b = bsub.add_parser('johnson')
    for arg in ('n', 'd', 'w', 'prev'):
        b.add_argument('--' + arg, type=int, required=True)
    b = bsub.add_parser('avz')
    for arg in ('n', 'delta', 'w', 'cap'):
        b.add_argument('--' + arg, type=int, required=True)
    for name in ('eq2', 'fdtw-eq2'):
        b = bsub.add_parser(name)
        for arg in ('n', 'k', 'q'):
            b.add_argument('--' + arg, type=int, required=True)
    b = bsub.add_parser('theorem5')
    b.add_argument('--m', type=int, required=True)
    b = bsub.add_parser('steiner')
    for arg in ('t', 'w', 'n'):
        b.add_argument('--' + arg, type=int, required=True)

    return parser


def main(argv=None):
    """ Entry point of the weightcruncher command.
    """
    args = make_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(name)s: %(levelname)s: %(message)s')
    try:
        config = config_from_args(args)
    except ValueError as err:
        print('error: {0}'.format(err), file=sys.stderr)
        return EXIT_USAGE

    return run(config)


if __name__ == '__main__':
    sys.exit(main())
