"""Base error class for all spiderforge errors – stores location and message."""


class Error(Exception):
    error_name = "Error"

    def __init__(self, details, location=None):
        super().__init__(details)
        self.details = details
        self.location = location

    def as_string(self):
        result = f"{self.error_name}: {self.details}"

        if self.location is not None:
            result += f"\nFile {self.location.fn}"
            if self.location.ln is not None:
                result += f", line {self.location.ln}"
            if self.location.field:
                result += f", field {self.location.field}"

        return result

    def __str__(self):
        return self.as_string()

    def __reduce__(self):
        # subclasses take extra constructor arguments; rebuild from state instead
        return (_restore, (type(self), self.args, dict(self.__dict__)))


def _restore(cls, args, state):
    err = cls.__new__(cls)
    Exception.__init__(err, *args)
    err.__dict__.update(state)
    return err
