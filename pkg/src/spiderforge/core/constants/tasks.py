"""Task constants – task kinds, grounding sub-tasks, scopes, and the default task mix."""

TASK_GLOBAL_DESC = "GlobalDesc"
TASK_LOCAL_DESC = "LocalDesc"
TASK_GROUNDING = "Grounding"
TASK_REFERRING = "Referring"

TASK_KINDS = [TASK_GLOBAL_DESC, TASK_LOCAL_DESC, TASK_GROUNDING, TASK_REFERRING]

SUB_HYD = "HyD-G"
SUB_SID = "SiD-G"
SUB_DAO = "DAO-G"
SUB_REF_SHORT = "RefShort"
SUB_REF_LONG = "RefLong"

GROUNDING_SUB_TASKS = [SUB_DAO, SUB_HYD, SUB_SID]
REFERRING_SUB_TASKS = [SUB_REF_SHORT, SUB_REF_LONG]

SCOPE_GLOBAL = "global"
SCOPE_LOCAL = "local"

POLARITY_MAX = "max"
POLARITY_MIN = "min"

ORDER_SEQUENCE = "sequence"
ORDER_FIRST = "first"
ORDER_LAST = "last"

# Columns of the dataset statistics table; training counts double as mix weights.
MIX_GLOBAL = "global"
MIX_LOCAL = "local"
MIX_GROUNDING = "grounding"
MIX_REF_SHORT = "ref_short"
MIX_REF_LONG = "ref_long"

DEFAULT_TASK_MIX = {
    MIX_GLOBAL: 3251,
    MIX_LOCAL: 9742,
    MIX_GROUNDING: 11669,
    MIX_REF_SHORT: 4506,
    MIX_REF_LONG: 4222,
}

DEFAULT_GROUNDING_SPLIT = {SUB_DAO: 1.0, SUB_HYD: 1.0, SUB_SID: 1.0}

MANIFEST_SCHEMA = "spider-manifest/1"
PREDICTIONS_SCHEMA = "spider-predictions/1"

VERIFICATION_DIMENSIONS = ["semantic", "spatial", "distortion", "linguistic"]
