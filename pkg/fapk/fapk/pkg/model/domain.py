from dataclasses import dataclass
from itertools import chain

from django.conf import settings

from fapk.pkg.model.choices import ConstraintKind
from fapk.pkg.model.settings import (
    RITA_IPES, LARGE_IPE_SIZE, DUPLEX_GAP, TX_RX_GAP, TX_TX_GAP
)


@dataclass(frozen=True)
class InterPlane(object):
    index: int
    members: tuple

    @property
    def is_large(self):
        return len(self.members) == LARGE_IPE_SIZE

    @property
    def spread(self):
        return self.members[-1] - self.members[0]

    def __contains__(self, frequency):
        return frequency in self.members


def inter_planes():
    return tuple(
        InterPlane(index, tuple(members))
        for index, members in enumerate(RITA_IPES)
    )


def rita_domain():
    """
    The 20 RITA frequencies of IPE_0..IPE_5 in ascending order
    :return: tuple of int
    """
    return tuple(sorted(chain.from_iterable(RITA_IPES)))


def ipe_of(frequency):
    """
    :param frequency: int
    :return: InterPlane or None when the frequency is not a RITA value
    """
    for ipe in inter_planes():
        if frequency in ipe:
            return ipe
    return None


def default_gap(kind, rr_gap=None, far_field_gap=None):
    """
    Minimum gap implied by a constraint kind.
    Receiver-receiver and far-field gaps are per-pair data in an instance,
    the values returned for them are the configured typical values.
    :param kind: ConstraintKind
    :param rr_gap: int or None - defaults to settings.FAPK_RR_GAP
    :param far_field_gap: int or None - defaults to settings.FAPK_FAR_FIELD_GAP
    :return: int
    """
    kind = ConstraintKind(kind)
    if kind == ConstraintKind.Duplex:
        return DUPLEX_GAP
    if kind == ConstraintKind.TxRx:
        return TX_RX_GAP
    if kind == ConstraintKind.TxTx:
        return TX_TX_GAP
    if kind == ConstraintKind.RxRx:
        return settings.FAPK_RR_GAP if rr_gap is None else rr_gap
    return (settings.FAPK_FAR_FIELD_GAP
            if far_field_gap is None else far_field_gap)
