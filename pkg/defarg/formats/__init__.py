"""
This module provides graph parsers and result writers.
"""

from defarg.formats.parsers import (parse_tgf, parse_apx, parse_graph,
                                    load_graph, detect_format)
from defarg.formats.results import (ExtensionsResult,
                                    DefenseExtensionsResult, ReasonsResult)
from defarg.formats.writers import (write_tgf, write_apx, to_dot, to_json,
                                    format_text, format_extension,
                                    format_defense_node, format_reason_set)
