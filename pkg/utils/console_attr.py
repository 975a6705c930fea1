# utils/console_attr.py

import sys
from enum import Enum

from colorama import Fore, Style

class ConsoleAttr(Enum):
    SUCCESS = "success"
    INFO = "info"
    WARNING = "warning"
    ERROR = "error"

_COLORS = {
    ConsoleAttr.SUCCESS: Fore.LIGHTGREEN_EX,
    ConsoleAttr.INFO: Fore.LIGHTBLUE_EX,
    ConsoleAttr.WARNING: Fore.LIGHTYELLOW_EX,
    ConsoleAttr.ERROR: Fore.LIGHTRED_EX,
}

def console_print(msg, attr, stream=None) -> None:
    """Prints a message to the console with its attribute: success, info, warning or error.

    Messages go to stderr by default so that a CSV streamed to stdout
    (``--out -``) is never interleaved with progress output.

    Args:
        msg (str): Message to print.
        attr (ConsoleAttr): success, info, warning or error.
        stream (file): Destination stream, stderr when omitted.

    Example:
        >>> console_print("fig1a done.", ConsoleAttr.SUCCESS)
    """
    stream = sys.stderr if stream is None else stream
    print(f"{_COLORS[attr]}{msg}{Style.RESET_ALL}", file=stream)
