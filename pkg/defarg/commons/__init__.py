"""
This module provides different utility classes.
"""

from defarg.commons.ordering import (canonical_extensions, sorted_members,
                                     extension_sort_key, member_sort_key)
