from collections.abc import MutableMapping

from defarg.model.constants import (Semantics, SOLVERS, GRAPH_FORMATS,
                                    OUTPUT_FORMATS, EDGE_PROBABILITIES,
                                    DEFAULT_MAX_ARGUMENTS,
                                    DEFAULT_MAX_DEFENSES)
from defarg.model.exceptions import InvalidOptionError

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


class Options(MutableMapping):
    """
    A class to represent and manage the options of a defarg run.

    This class acts as a flexible container for the settings shared by the
    command-line front end and the workflows: which semantics to evaluate,
    which engine computes extensions, how input is read and output written,
    and the bounds and seeds of the exhaustive and random procedures. It
    inherits from MutableMapping to allow dictionary-like behavior for
    setting and retrieving options.

    Parameters
    ----------
    semantics : str or Semantics, optional
        The semantics used by every command. Default is 'complete'.
    solver : str, optional
        The engine computing extensions, either 'labelling' or
        'brute-force'. Default is 'labelling'.
    input_format : str, optional
        The graph format ('tgf' or 'apx'). Default is None, meaning the
        format is detected from the file suffix.
    output_format : str, optional
        The rendering of results ('text', 'json' or 'dot', or 'tgf' and
        'apx' for generated graphs). Default is 'text'.
    verbose : bool, optional
        If True, logging is set to DEBUG regardless of `log_level`.
        Default is False.
    log_level : str, optional
        The logging threshold. Default is 'WARNING'.
    max_arguments : int, optional
        The largest argument graph the brute-force engine accepts. Default
        is 12.
    max_defenses : int, optional
        The largest number of defenses the brute-force engine accepts.
        Default is 16.
    seed : int, optional
        The seed of generated random graphs. Default is 1.
    edge_probability : float, optional
        The attack probability of generated random graphs, one of 0.15, 0.3
        or 0.5. Default is 0.3.

    Options can be changed but never removed.
    """

    def __init__(self,
                 semantics: str | Semantics = Semantics.COMPLETE,
                 solver: str = 'labelling',
                 input_format: str | None = None,
                 output_format: str = 'text',
                 verbose: bool = False,
                 log_level: str = 'WARNING',
                 max_arguments: int = DEFAULT_MAX_ARGUMENTS,
                 max_defenses: int = DEFAULT_MAX_DEFENSES,
                 seed: int = 1,
                 edge_probability: float = 0.3):
        self._options = {
            'semantics': Semantics.parse(semantics),
            'solver': solver,
            'input_format': input_format,
            'output_format': output_format,
            'verbose': verbose,
            'log_level': log_level.upper(),
            'max_arguments': max_arguments,
            'max_defenses': max_defenses,
            'seed': seed,
            'edge_probability': edge_probability,
        }

        self._validate()

    def __getitem__(self, key):
        return self._options[key]

    def __setitem__(self, key, value):
        """
        Sets the value for the given key and validates the result.

        Parameters
        ----------
        key : str
            The key for the value to set.
        value
            The value to set for the given key.

        Raises
        ------
        InvalidOptionError
            If the key is unknown or the value is out of range.
        """
        if key not in self._options:
            raise InvalidOptionError(f"Unknown option: {key}")
        if key == 'semantics':
            value = Semantics.parse(value)
        self._options[key] = value
        self._validate()

    def __delitem__(self, key):
        raise InvalidOptionError(f"Option {key} cannot be removed")

    def __iter__(self):
        return iter(self._options)

    def __len__(self):
        return len(self._options)

    @property
    def effective_log_level(self) -> str:
        """
        The logging threshold after applying the `verbose` shortcut.
        """
        return 'DEBUG' if self._options['verbose'] else \
            self._options['log_level']

    def to_dict(self):
        """
        Converts the options to a dictionary.

        Returns
        -------
        dict
            A dictionary representation of the options.
        """
        return self._options

    def _validate(self):
        """
        Validates every option value.

        Raises
        ------
        InvalidOptionError
            If any option is outside its allowed values.
        """
        options = self._options
        if options['solver'] not in SOLVERS:
            raise InvalidOptionError(
                f"Invalid solver: {options['solver']}. Must be one of "
                f"{sorted(SOLVERS)}.")
        if options['input_format'] is not None and \
                options['input_format'] not in GRAPH_FORMATS:
            raise InvalidOptionError(
                f"Invalid input format: {options['input_format']}. Must be "
                f"one of {sorted(GRAPH_FORMATS)}.")
        if options['output_format'] not in OUTPUT_FORMATS:
            raise InvalidOptionError(
                f"Invalid output format: {options['output_format']}. Must "
                f"be one of {sorted(OUTPUT_FORMATS)}.")
        if options['log_level'] not in LOG_LEVELS:
            raise InvalidOptionError(
                f"Invalid log level: {options['log_level']}. Must be one "
                f"of {list(LOG_LEVELS)}.")
        for key in ('max_arguments', 'max_defenses'):
            if not isinstance(options[key], int) or options[key] < 0:
                raise InvalidOptionError(
                    f"Invalid {key}: {options[key]}. Must be a "
                    f"non-negative integer.")
        if not isinstance(options['seed'], int) or options['seed'] < 0:
            raise InvalidOptionError(
                f"Invalid seed: {options['seed']}. Must be a non-negative "
                f"integer.")
        if options['edge_probability'] not in EDGE_PROBABILITIES:
            raise InvalidOptionError(
                f"Invalid edge probability: {options['edge_probability']}. "
                f"Must be one of {list(EDGE_PROBABILITIES)}.")

    def __repr__(self):
        items = [f"{k}={v!r}" for k, v in self.to_dict().items()]
        return f"{type(self).__name__}({', '.join(items)})"
