"""Exception types shared by the pipelines."""


class HypothesisError(ValueError):
    """An input violates a hypothesis of the requested construction.

    ``stage`` names the pipeline step that detected the failure; ``partial``
    optionally carries the result of the stages that did complete.
    """

    def __init__(self, stage: str, message: str, partial=None):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage
        self.partial = partial
