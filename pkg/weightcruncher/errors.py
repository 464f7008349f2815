"""
SPDX-License-Identifier: LGPL-2.1

Copyright 2026 The weightcruncher developers
"""


class wc_error(Exception):
    """ Base class of all weightcruncher errors.
    """


class cap_exceeded(wc_error):
    """ A desk-scale size cap was exceeded.
    """


class code_format_error(wc_error):
    """ A code file could not be parsed.
    """


class verification_error(wc_error):
    """
    A declared parameter of a code was refuted by exhaustive checking.

    Attributes
    ----------
    claim : string
        The refuted claim, e.g. 'd>=4'.
    witness : tuple
        The offending pair (or block) of the code, if any.
    """
    def __init__(self, msg, claim=None, witness=None):
        super().__init__(msg)
        self.claim = claim
        self.witness = witness


class decoding_failure(wc_error):
    """
    A received word could not be decoded or corrected.

    Attributes
    ----------
    reason : string
        One of 'not-subspace', 'not-in-code', 'no-beta', 'ambiguous-tie',
        'bad-weight'.
    """
    reasons = ('not-subspace', 'not-in-code', 'no-beta', 'ambiguous-tie',
               'bad-weight')

    def __init__(self, reason, msg=''):
        if reason not in self.reasons:
            raise ValueError('Unknown failure reason \'{0}\''.format(reason))

        super().__init__('{0}: {1}'.format(reason, msg) if msg else reason)
        self.reason = reason
