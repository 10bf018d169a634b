from defarg.model.constants import (SOLVERS, DEFAULT_MAX_ARGUMENTS,
                                    DEFAULT_MAX_DEFENSES)
from defarg.model.exceptions import InvalidOptionError
from defarg.oracle.brute_force_solver import BruteForceSolver
from defarg.solvers.labelling_solver import LabellingSolver


class SolverFactory:
    """
    A factory class for creating extension solvers based on the specified
    engine name.
    """

    ENGINES = SOLVERS

    @staticmethod
    def get_solver(name: str = 'labelling',
                   max_arguments: int = DEFAULT_MAX_ARGUMENTS,
                   max_defenses: int = DEFAULT_MAX_DEFENSES):
        """
        Returns the solver registered under `name`.

        Parameters
        ----------
        name: str
            The engine name, 'labelling' or 'brute-force'.
        max_arguments: int
            The largest argument graph the brute-force engine accepts.
        max_defenses: int
            The largest number of defenses the brute-force engine accepts.

        Returns
        -------
        Solver
            An instance of the requested solver.

        Raises
        ------
        InvalidOptionError
            If the engine name is not recognized.
        """
        if name not in SolverFactory.ENGINES:
            raise InvalidOptionError(f"Unknown solver: {name}")

        if name == 'brute-force':
            return BruteForceSolver(max_arguments=max_arguments,
                                    max_defenses=max_defenses)

        return LabellingSolver()

    def from_options(self, options):
        """
        Returns the solver configured by an :class:`Options` instance.
        """
        return self.get_solver(options['solver'], options['max_arguments'],
                               options['max_defenses'])


solver_factory = SolverFactory()
