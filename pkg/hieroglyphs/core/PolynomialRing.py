"""
Polynomial ring: the ordered list of declared variables.

Variable ids are contiguous from 0 and double as positions in exponent
vectors, so a ring is fully described by its variables.
"""
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .Errors import DuplicateVariable, UndeclaredVariable
from .Variable import GridCell, Variable, split_name


class PolynomialRing:
    """
    A polynomial ring over the rationals with named variables.

    Rings are immutable; extending a ring with polarization copies returns a
    new ring whose first variables are those of the old one.
    """

    def __init__(self, variables: Sequence[Variable]):
        """
        Initialize a ring from its variables.

        Args:
            variables: Variables with ids 0..N-1 in order

        Raises:
            DuplicateVariable: If a (base name, copy index) pair repeats
            ValueError: If ids are not contiguous from 0
        """
        self._variables: Tuple[Variable, ...] = tuple(variables)
        self._by_name: Dict[str, int] = {}
        self._copies: Dict[str, Dict[int, int]] = {}
        for position, variable in enumerate(self._variables):
            if variable.id != position:
                raise ValueError(f"Variable ids must be contiguous from 0, got {variable.id} at {position}")
            if variable.copy_index < 1:
                raise ValueError(f"Copy index must be positive for {variable.base_name}")
            if variable.name in self._by_name:
                raise DuplicateVariable(f"Duplicate variable: {variable.name}")
            self._by_name[variable.name] = variable.id
            self._copies.setdefault(variable.base_name, {})[variable.copy_index] = variable.id

    @classmethod
    def from_names(cls, names: Iterable[str],
                   grids: Optional[Sequence[Optional[GridCell]]] = None) -> "PolynomialRing":
        """
        Build a ring from printed names, optionally with grid cells.

        Args:
            names: Variable names; ``b~k`` declares copy k of base b
            grids: Grid cell per variable, or None

        Returns:
            The new ring
        """
        names = list(names)
        grids = list(grids) if grids is not None else [None] * len(names)
        variables = []
        for index, (name, grid) in enumerate(zip(names, grids)):
            base, copy_index = split_name(name)
            variables.append(Variable(index, base, copy_index, grid))
        return cls(variables)

    @property
    def variables(self) -> Tuple[Variable, ...]:
        return self._variables

    @property
    def nvars(self) -> int:
        return len(self._variables)

    @property
    def names(self) -> List[str]:
        return [variable.name for variable in self._variables]

    def variable(self, var_id: int) -> Variable:
        return self._variables[var_id]

    def index(self, name: str) -> int:
        """
        Look up a variable id by printed name.

        Raises:
            UndeclaredVariable: If no variable has that name
        """
        if name not in self._by_name:
            raise UndeclaredVariable(f"Undeclared variable: {name}")
        return self._by_name[name]

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def base_id(self, var_id: int) -> int:
        """Id of the copy-1 variable sharing this variable's base name."""
        variable = self._variables[var_id]
        return self._copies[variable.base_name].get(1, var_id)

    def base_ids(self) -> Tuple[int, ...]:
        return tuple(self.base_id(i) for i in range(self.nvars))

    def next_copy_index(self, base_name: str) -> int:
        return max(self._copies.get(base_name, {0: None})) + 1

    def with_copies(self, sources: Sequence[int]) -> "PolynomialRing":
        """
        Append one new copy for each listed source variable.

        Args:
            sources: Ids of the variables to copy, in order

        Returns:
            The enlarged ring; new ids follow the existing ones
        """
        variables = list(self._variables)
        next_index: Dict[str, int] = {}
        for source in sources:
            original = self._variables[source]
            base = original.base_name
            copy_index = next_index.get(base, self.next_copy_index(base))
            next_index[base] = copy_index + 1
            variables.append(Variable(len(variables), base, copy_index, original.grid))
        return PolynomialRing(variables)

    def has_grid(self) -> bool:
        return all(variable.grid is not None for variable in self._variables)

    def __eq__(self, other):
        if not isinstance(other, PolynomialRing):
            return NotImplemented
        return self._variables == other._variables

    def __hash__(self):
        return hash(self._variables)

    def __repr__(self):
        return f"PolynomialRing({', '.join(self.names)})"
