"""Bundled example machine files."""
import os

RESOURCES_DIR_PATH = os.path.abspath(os.path.dirname(__file__))


def get_fixture_names():
    """
    Get names of bundled machine files.

    Returns
    -------
    list of str
    """
    return sorted(os.path.splitext(name)[0] for name in os.listdir(RESOURCES_DIR_PATH) if name.endswith(".json"))


def get_fixture_path(name):
    """
    Get path of a bundled machine file.

    Parameters
    ----------
    name: str
        file name, without extension (for example "footnote2")

    Returns
    -------
    str
    """
    path = os.path.join(RESOURCES_DIR_PATH, f"{name}.json")
    if not os.path.isfile(path):
        raise ValueError(f"No bundled machine file named {name!r}, available: {get_fixture_names()}.")
    return path
