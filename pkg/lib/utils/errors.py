# ------------------------------------------------------------------------------
# Lattices of finite Abelian groups.
# Licensed under the MIT License.
# ------------------------------------------------------------------------------

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function


class LatticeError(ValueError):
    """Domain error with a machine readable code."""

    code = 'lattice_error'

    def __init__(self, message, code=None):
        super(LatticeError, self).__init__(message)
        if code is not None:
            self.code = code

    @property
    def message(self):
        return self.args[0] if self.args else ''


class GroupSpecError(LatticeError):
    code = 'bad_group_spec'


class MatrixFormatError(LatticeError):
    code = 'bad_matrix'


class NotWellRoundedError(LatticeError):
    code = 'not_well_rounded'


class HypothesisError(LatticeError):
    code = 'hypothesis_failed'


class CapExceededError(LatticeError):
    code = 'cap_exceeded'


class BudgetExhaustedError(LatticeError):
    code = 'budget_exhausted'

    def __init__(self, message, seed=None):
        super(BudgetExhaustedError, self).__init__(message)
        self.seed = seed


class VerificationError(RuntimeError):
    """A constructed object failed its exact check. Never swallowed."""

    code = 'verification_failed'
