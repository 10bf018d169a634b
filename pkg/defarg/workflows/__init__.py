from defarg.workflows.check_workflow import (check_workflow, CheckReport,
                                             PropertyCheck)
from defarg.workflows.equivalence_workflow import equivalence_workflow
