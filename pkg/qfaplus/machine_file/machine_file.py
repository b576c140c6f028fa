"""
Machine file module.

A machine file is a json object with common fields (kind, version, name, alphabet) and a payload depending on the
machine kind:
 - mo1gqfa: dim, rho0, ops (symbol: list of Kraus operators), p_acc
 - mm1gqfa: dim, rho0, ops (alphabet symbols and both end-markers), projectors (non, acc, rej)
 - molm: dim, rho0, ops (alphabet symbols, optionally both end-markers), p_acc
 - blm: pi (1 x n), mats (symbol: n x n), eta (n x 1)
 - pa: pi (list), mats (symbol: row-stochastic matrix), eta (list of 0/1)
 - dfa: states, start, delta (symbol: successor of each state), accepting
"""

import collections
import json
import logging

from ..conf import CONF
from ..exceptions import MachineFileError
from ..quantum_ops.measurement import ProjectorSet, NON, ACC, REJ
from ..automata.alphabet import END_MARKERS
from ..automata.classical import BilinearMachine, ProbabilisticAutomaton, DFA
from ..automata.mm import MM1gQFA
from ..automata.mo import MO1gQFA
from ..automata.molm import MOLM
from ..util import json_data_to_json, to_buffer
from .codec import encode_matrix, decode_matrix, decode_vector, encode_kraus, decode_kraus

logger = logging.getLogger(__name__)

COMMON_FIELDS = ("kind", "version", "name", "alphabet")


def _get(json_data, key, expected_type=None):
    try:
        value = json_data[key]
    except KeyError:
        raise MachineFileError(f"missing field: {key!r}")
    if expected_type is not None and not isinstance(value, expected_type):
        raise MachineFileError(f"field {key!r} must be of type {expected_type.__name__}, got {value!r}")
    return value


def _decode_ops(json_data):
    ops = _get(json_data, "ops", dict)
    return collections.OrderedDict(
        (symbol, decode_kraus(kraus, name=f"ops[{symbol}]")) for symbol, kraus in ops.items())


def _decode_quantum_common(json_data):
    rho0 = decode_matrix(_get(json_data, "rho0"), name="rho0")
    dim = _get(json_data, "dim", int)
    if rho0.shape != (dim, dim):
        raise MachineFileError(f"rho0 has shape {rho0.shape}, expected dimension {dim}")
    return rho0, _decode_ops(json_data)


# ------------------------------------------------ encoders ------------------------------------------------------------
def _encode_ops(ops):
    return collections.OrderedDict((symbol, encode_kraus(op)) for symbol, op in ops.items())


def _encode_mo(m):
    return collections.OrderedDict((
        ("dim", m.dim),
        ("rho0", encode_matrix(m.rho0.matrix)),
        ("ops", _encode_ops(m.ops)),
        ("p_acc", encode_matrix(m.p_acc))
    ))


def _encode_mm(m):
    return collections.OrderedDict((
        ("dim", m.dim),
        ("rho0", encode_matrix(m.rho0.matrix)),
        ("ops", _encode_ops(m.ops)),
        ("projectors", collections.OrderedDict((label, encode_matrix(p)) for label, p in m.projectors))
    ))


def _encode_blm(b):
    return collections.OrderedDict((
        ("pi", encode_matrix(b.pi)),
        ("mats", collections.OrderedDict((symbol, encode_matrix(a)) for symbol, a in b.mats.items())),
        ("eta", encode_matrix(b.eta))
    ))


def _encode_pa(p):
    return collections.OrderedDict((
        ("pi", [float(x) for x in p.pi[0]]),
        ("mats", collections.OrderedDict((symbol, encode_matrix(a, complex_entries=False))
                                         for symbol, a in p.mats.items())),
        ("eta", [float(x) for x in p.eta[:, 0]])
    ))


def _encode_dfa(d):
    return collections.OrderedDict((
        ("states", d.states),
        ("start", d.start),
        ("delta", collections.OrderedDict((symbol, list(row)) for symbol, row in d.delta.items())),
        ("accepting", sorted(d.accepting))
    ))


# ------------------------------------------------ decoders ------------------------------------------------------------
def _decode_mo(json_data, alphabet, name, check):
    rho0, ops = _decode_quantum_common(json_data)
    p_acc = decode_matrix(_get(json_data, "p_acc"), name="p_acc")
    return MO1gQFA(alphabet, rho0, ops, p_acc, check=check, name=name)


def _decode_mm(json_data, alphabet, name, check):
    rho0, ops = _decode_quantum_common(json_data)
    projectors_data = _get(json_data, "projectors", dict)
    projectors = []
    for label in (NON, ACC, REJ):
        if label not in projectors_data:
            raise MachineFileError(f"missing projector: {label!r}")
        projectors.append((label, decode_matrix(projectors_data[label], name=f"projectors[{label}]")))
    return MM1gQFA(alphabet, rho0, ops, ProjectorSet(projectors, check=False), check=check, name=name)


def _decode_molm(json_data, alphabet, name, check):
    rho0, ops = _decode_quantum_common(json_data)
    p_acc = decode_matrix(_get(json_data, "p_acc"), name="p_acc")
    return MOLM(alphabet, rho0, ops, p_acc, check=check, name=name)


def _decode_blm(json_data, alphabet, name, check):
    mats = collections.OrderedDict(
        (symbol, decode_matrix(a, name=f"mats[{symbol}]")) for symbol, a in _get(json_data, "mats", dict).items())
    symbols = tuple(s for s in mats if s not in END_MARKERS)
    if set(symbols) != set(alphabet):
        raise MachineFileError(f"matrices are given for symbols {symbols}, alphabet is {tuple(alphabet)}")
    return BilinearMachine(
        decode_matrix(_get(json_data, "pi"), name="pi"), mats, decode_matrix(_get(json_data, "eta"), name="eta"),
        name=name, alphabet=alphabet)


def _decode_pa(json_data, alphabet, name, check):
    mats = collections.OrderedDict(
        (symbol, decode_matrix(a, name=f"mats[{symbol}]", dtype=float))
        for symbol, a in _get(json_data, "mats", dict).items())
    return ProbabilisticAutomaton(
        alphabet,
        decode_vector(_get(json_data, "pi"), name="pi"),
        mats,
        decode_vector(_get(json_data, "eta"), name="eta"),
        check=check,
        name=name
    )


def _decode_dfa(json_data, alphabet, name, check):
    delta = _get(json_data, "delta", dict)
    for symbol, row in delta.items():
        if not isinstance(row, list) or not all(isinstance(q, int) for q in row):
            raise MachineFileError(f"delta[{symbol}] must be a list of states")
    accepting = _get(json_data, "accepting", list)
    return DFA(
        alphabet,
        _get(json_data, "states", int),
        _get(json_data, "start", int),
        delta,
        accepting,
        check=check,
        name=name
    )


CODECS = collections.OrderedDict((
    (MO1gQFA.kind, (_encode_mo, _decode_mo)),
    (MM1gQFA.kind, (_encode_mm, _decode_mm)),
    (MOLM.kind, (_encode_mo, _decode_molm)),
    (BilinearMachine.kind, (_encode_blm, _decode_blm)),
    (ProbabilisticAutomaton.kind, (_encode_pa, _decode_pa)),
    (DFA.kind, (_encode_dfa, _decode_dfa))
))


class MachineFile:
    """
    Serialized machine.

    Parameters
    ----------
    kind: str
        one of mo1gqfa, mm1gqfa, molm, blm, pa, dfa
    alphabet: typing.Sequence[str]
    payload: collections.OrderedDict
        kind specific json data
    name: str or None
    version: int or None
        default CONF.file_format_version
    """

    def __init__(self, kind, alphabet, payload, name=None, version=None):
        if kind not in CODECS:
            raise MachineFileError(f"unknown machine kind: {kind!r}, expected one of {tuple(CODECS)}")
        version = CONF.file_format_version if version is None else version
        if not isinstance(version, int) or isinstance(version, bool) or version < 1:
            raise MachineFileError(f"invalid version: {version!r}")
        if version > CONF.file_format_version:
            raise MachineFileError(
                f"file format version {version} is not supported (max supported: {CONF.file_format_version})")
        if not isinstance(alphabet, (list, tuple)) or not all(isinstance(s, str) for s in alphabet):
            raise MachineFileError(f"alphabet must be a list of symbols, got {alphabet!r}")
        self.kind = kind
        self.alphabet = tuple(alphabet)
        self.payload = payload
        self.name = name
        self.version = version

    def __repr__(self):
        """
        Repr.

        Returns
        -------
        str
        """
        return f"<MachineFile {self.kind} over {{{', '.join(self.alphabet)}}}>"

    @classmethod
    def from_machine(cls, machine):
        """
        Serialize a machine.

        Parameters
        ----------
        machine: qfaplus.automata.machine.Machine

        Returns
        -------
        MachineFile
        """
        encoder, _ = CODECS[machine.kind]
        return cls(machine.kind, machine.alphabet.symbols, encoder(machine), name=machine.name)

    def to_machine(self, check=True):
        """
        Build the machine.

        Parameters
        ----------
        check: bool, default True
            if True, raises MachineValidationError on an invalid machine; if False, the machine is built without
            validation (bilinear machines always check their dimensions)

        Returns
        -------
        qfaplus.automata.machine.Machine

        Raises
        ------
        MachineFileError
            malformed payload
        MachineValidationError
        """
        _, decoder = CODECS[self.kind]
        try:
            return decoder(self.payload, self.alphabet, self.name, check)
        except ValueError as e:
            # alphabet or matrix errors raised by constructors
            raise MachineFileError(str(e)) from e

    @classmethod
    def from_json_data(cls, json_data):
        """
        Create from json data.

        Parameters
        ----------
        json_data: dict

        Returns
        -------
        MachineFile
        """
        if not isinstance(json_data, dict):
            raise MachineFileError("a machine file must contain a json object")
        payload = collections.OrderedDict((k, v) for k, v in json_data.items() if k not in COMMON_FIELDS)
        return cls(
            _get(json_data, "kind", str),
            _get(json_data, "alphabet"),
            payload,
            name=json_data.get("name"),
            version=_get(json_data, "version")
        )

    def to_json_data(self):
        """
        Get json data.

        Returns
        -------
        collections.OrderedDict
        """
        json_data = collections.OrderedDict((
            ("kind", self.kind),
            ("version", self.version),
            ("name", self.name),
            ("alphabet", list(self.alphabet))
        ))
        json_data.update(self.payload)
        return json_data

    @classmethod
    def load(cls, buffer_or_path):
        """
        Load a machine file.

        Parameters
        ----------
        buffer_or_path: typing.StringIO or str
            json buffer or path (the encoding of a path is detected)

        Returns
        -------
        MachineFile
        """
        path, buffer = to_buffer(buffer_or_path)
        with buffer:
            try:
                json_data = json.load(buffer, object_pairs_hook=collections.OrderedDict)
            except json.JSONDecodeError as e:
                raise MachineFileError(f"invalid json in {'buffer' if path is None else path}: {e}") from e
        logger.info(f"machine file loaded from {'buffer' if path is None else path}")
        return cls.from_json_data(json_data)

    def save(self, buffer_or_path=None, indent=2):
        """
        Save machine file.

        Parameters
        ----------
        buffer_or_path: typing.StringIO or str or None
            output to write into; if None, a json string is returned
        indent: int

        Returns
        -------
        str or None
        """
        return json_data_to_json(self.to_json_data(), buffer_or_path=buffer_or_path, indent=indent)


def load_machine(buffer_or_path, check=True):
    """
    Load a machine from a machine file.

    Parameters
    ----------
    buffer_or_path: typing.StringIO or str
    check: bool, default True

    Returns
    -------
    qfaplus.automata.machine.Machine
    """
    return MachineFile.load(buffer_or_path).to_machine(check=check)


def save_machine(machine, buffer_or_path=None):
    """
    Save a machine to a machine file.

    Parameters
    ----------
    machine: qfaplus.automata.machine.Machine
    buffer_or_path: typing.StringIO or str or None

    Returns
    -------
    str or None
    """
    return MachineFile.from_machine(machine).save(buffer_or_path=buffer_or_path)
