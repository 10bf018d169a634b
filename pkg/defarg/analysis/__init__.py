"""
This module provides reasons for accepting arguments and the equivalence
relations between argument graphs.
"""

from defarg.analysis.reasons import (ReasonKind, transitive_closure,
                                     direct_reason, root_reason,
                                     direct_reasons, root_reasons,
                                     reason_table)
from defarg.analysis.equivalence import (EquivalenceKind, EquivalenceVerdict,
                                         c_kernel, standard_equivalent,
                                         strong_equivalent_co,
                                         defense_equivalent, root_equivalent,
                                         is_summarization,
                                         project_extensions,
                                         summarization_projection_holds)
