from z3 import Not, Solver, unsat

from octoval.configuration import Configuration


class SMTSolver:
    def __new__(cls, designated_solver=None):
        designated_solver = designated_solver or Configuration.get_solver()
        if designated_solver == 'z3':
            return Solver()
        else:
            raise Exception("No SMT backend found")


def one_time_proof(solver, claim):
    """
    A claim holds under the solver's constraints iff its negation is unsat.
    The negation is not left in the solver, it is an one-time query
    """
    solver.push()
    solver.add(Not(claim))
    result = solver.check()
    solver.pop()

    return result == unsat, result
