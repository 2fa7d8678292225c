# This file proves, once and for all a >= b > 0, that the closed-form sines
# of the central angles are valid arcsine arguments.
# With s = sqrt(2ab) every sine is a ratio of positive polynomials in (a, b, s),
# so each bound is stated with the denominators cleared
from dataclasses import dataclass
from logging import getLogger

from z3 import And, Real

from octoval.core.solver import SMTSolver, one_time_proof

logging = getLogger(__name__)


@dataclass(frozen=True)
class BoundProof:
    name: str
    claim: str
    proven: bool

    def as_dict(self):
        return {'name': self.name, 'claim': self.claim, 'proven': self.proven}


def _claims(a, b, s):
    num_gamma, den_gamma = b * (2 * a + b + s), (2 * a + b) * (a + b + s)
    num_beta, den_beta = 2 * (a + b) * s, (a + 2 * b) * (2 * a + b)
    num_delta, den_delta = a * (a + 2 * b + s), (a + 2 * b) * (a + b + s)
    return [
        ('sin_gamma', '0 < sin(gamma) <= 1',
         And(num_gamma > 0, den_gamma > 0, num_gamma <= den_gamma)),
        ('sin_beta', '0 < sin(beta) < 1',
         And(num_beta > 0, den_beta > 0, num_beta < den_beta)),
        ('sin_delta', '0 < sin(delta) <= 1',
         And(num_delta > 0, den_delta > 0, num_delta <= den_delta)),
    ]


def prove_sine_bounds(solver=None):
    """
    Prove the bounds of sin(gamma), sin(beta) and sin(delta) over every valid ellipse.
    sin(beta) < 1 is strict: the intermediate arc never degenerates to a quarter circle
    """
    a, b, s = Real('a'), Real('b'), Real('s')
    s_ = SMTSolver(solver)
    s_.add(b > 0, a >= b, s > 0, s * s == 2 * a * b)

    proofs = []
    for name, claim, formula in _claims(a, b, s):
        proven, result = one_time_proof(s_, formula)
        logging.info(f"Prove {name}: {claim}, solver answers {result}")
        proofs.append(BoundProof(name, claim, proven))
    return proofs
