from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, Field, ValidationError, model_validator

from logic_blocks.parser import ParseLimits

Command = Literal["parse", "check", "dump", "oracle"]


class CliConfig(BaseModel):
    """
    Validated settings for one command-line run.
    Command-specific requirements are checked before any work starts.
    """

    command: Command
    grammar: Path
    sentence: Optional[str] = Field(None, description="Whitespace-tokenized input for parse")
    target: Optional[str] = Field(None, description="Goal category for parse, e.g. s")
    word: Optional[str] = Field(None, description="Restrict dump to one word")
    corpus: Optional[Path] = Field(None, description="sentence<TAB>target file for oracle")
    all_derivations: bool = False
    max_derivations: int = Field(64, ge=1)
    max_depth: Optional[int] = Field(None, ge=1)
    output: Literal["pretty", "golden"] = "golden"
    verbose: bool = False

    @model_validator(mode="after")
    def check_command_fields(self):
        if self.command == "parse":
            if self.sentence is None:
                raise ValueError("parse needs a sentence")
            if not self.target:
                raise ValueError("parse needs --target")
        if self.command == "oracle" and self.corpus is None:
            raise ValueError("oracle needs --corpus")
        return self

    @property
    def limits(self) -> ParseLimits:
        return ParseLimits(max_derivations=self.max_derivations, max_depth=self.max_depth)


def config_errors(error: ValidationError):
    """One line per validation problem, without pydantic's URLs."""
    lines = []
    for item in error.errors():
        location = ".".join(str(part) for part in item["loc"])
        message = item["msg"].removeprefix("Value error, ")
        lines.append(f"{location}: {message}" if location else message)
    return lines
