from fapk.pkg.common.choices import ChoiceStringEnum


class ConstraintKind(ChoiceStringEnum):
    Duplex = 'duplex'
    TxTx = 'txtx'
    TxRx = 'txrx'
    RxRx = 'rxrx'
    FarField = 'far'

    @property
    def is_co_site(self):
        return self in (ConstraintKind.TxTx, ConstraintKind.TxRx,
                        ConstraintKind.RxRx)


class Direction(ChoiceStringEnum):
    Tx = 'tx'
    Rx = 'rx'
