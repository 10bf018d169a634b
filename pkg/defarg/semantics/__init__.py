"""
This module provides argument semantics and defense semantics.
"""

from defarg.semantics.argument_semantics import (grounded_extension,
                                                 complete_extensions,
                                                 preferred_extensions,
                                                 stable_extensions,
                                                 extensions)
from defarg.semantics.defense_semantics import (d_conflict_free, d_defends,
                                                d_admissible,
                                                defense_extensions,
                                                d_of_extension,
                                                correspondence_check,
                                                defense_coverage_holds,
                                                CorrespondenceReport)
