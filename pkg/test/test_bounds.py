import pytest

from octoval.configuration import Configuration
from octoval.core.bounds import prove_sine_bounds
from octoval.core.solver import SMTSolver


def test_sine_bounds_are_proven():
    proofs = prove_sine_bounds()
    assert [proof.name for proof in proofs] == ['sin_gamma', 'sin_beta', 'sin_delta']
    assert all(proof.proven for proof in proofs), [p.as_dict() for p in proofs if not p.proven]


def test_beta_bound_is_strict():
    beta = {proof.name: proof for proof in prove_sine_bounds()}['sin_beta']
    assert '< 1' in beta.claim
    assert beta.as_dict() == {'name': 'sin_beta', 'claim': beta.claim, 'proven': True}


def test_unknown_solver():
    with pytest.raises(Exception, match="No SMT backend found"):
        SMTSolver('cvc5')
    Configuration.set_solver('cvc5')
    with pytest.raises(Exception, match="No SMT backend found"):
        prove_sine_bounds()
