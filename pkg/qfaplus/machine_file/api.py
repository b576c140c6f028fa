"""machine_file api."""

__all__ = ["MachineFile", "load_machine", "save_machine"]

from .machine_file import MachineFile, load_machine, save_machine
