#include "core/types.hpp"

#include <cmath>
#include <cstdlib>

namespace acsee {

SituationKind negate(SituationKind k) {
  switch (k) {
    case SituationKind::DeltaPositive:
      return SituationKind::DeltaNegative;
    case SituationKind::DeltaNegative:
      return SituationKind::DeltaPositive;
    case SituationKind::Balanced:
      return SituationKind::Balanced;
  }
  return SituationKind::Balanced;
}

const char* to_string(Role r) {
  switch (r) {
    case Role::Civilian:
      return "civilian";
    case Role::Activist:
      return "activist";
    case Role::Cop:
      return "cop";
  }
  return "?";
}

const char* to_string(Strategy s) {
  return s == Strategy::Cooperation ? "cooperation" : "defection";
}

const char* to_string(SituationKind k) {
  switch (k) {
    case SituationKind::DeltaPositive:
      return "delta_positive";
    case SituationKind::Balanced:
      return "balanced";
    case SituationKind::DeltaNegative:
      return "delta_negative";
  }
  return "?";
}

const char* to_string(Termination t) {
  return t == Termination::SideEliminated ? "side_eliminated" : "max_ticks";
}

std::optional<Role> role_from_string(const std::string& s) {
  if (s == "civilian") return Role::Civilian;
  if (s == "activist") return Role::Activist;
  if (s == "cop") return Role::Cop;
  return std::nullopt;
}

double distance(Cell a, Cell b) {
  const double dr = static_cast<double>(a.row) - b.row;
  const double dc = static_cast<double>(a.col) - b.col;
  return std::sqrt(dr * dr + dc * dc);
}

int moore_distance(Cell a, Cell b) {
  return std::max(std::abs(a.row - b.row), std::abs(a.col - b.col));
}

Grid::Grid(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0)
    throw Error(ErrorKind::Validation, "grid dimensions must be positive");
  cells_.assign(static_cast<std::size_t>(rows) * cols, -1);
}

void Grid::place(int agent_id, Cell c) {
  if (!in_bounds(c)) throw Error(ErrorKind::Runtime, "place out of bounds");
  int& slot = cells_[index(c)];
  if (slot >= 0) throw Error(ErrorKind::Runtime, "cell already occupied");
  slot = agent_id;
}

void Grid::remove(Cell c) {
  if (!in_bounds(c)) throw Error(ErrorKind::Runtime, "remove out of bounds");
  cells_[index(c)] = -1;
}

void Grid::move(Cell from, Cell to) {
  if (from == to) return;
  int& src = cells_[index(from)];
  int& dst = cells_[index(to)];
  if (src < 0) throw Error(ErrorKind::Runtime, "move from empty cell");
  if (dst >= 0) throw Error(ErrorKind::Runtime, "move into occupied cell");
  dst = src;
  src = -1;
}

int SimState::live_count(Role r) const {
  int n = 0;
  for (const Agent& a : agents)
    if (a.alive && a.role == r) ++n;
  return n;
}

const Agent* SimState::agent_at(Cell c) const {
  if (!grid.in_bounds(c)) return nullptr;
  const int id = grid.occupant(c);
  return id < 0 ? nullptr : &agents[static_cast<std::size_t>(id)];
}

}  // namespace acsee
