"""Process exit codes – one per failure class so CI can tell them apart."""

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_FORGE = 3
EXIT_GROUND = 4
EXIT_EVAL = 5
EXIT_VALIDATE_FAIL = 6
