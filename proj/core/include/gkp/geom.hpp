#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gkp {

using ItemId = int;
using Coord = long;

// Axis-parallel rectangle with integer sizes and profit. Sizes and profit
// are strictly positive; ids are unique within an instance.
struct Item {
  ItemId id = 0;
  Coord width = 1;
  Coord height = 1;
  long profit = 1;

  long area() const { return static_cast<long>(width) * height; }
};

// Placement of one item: left/bottom coordinates plus optional 90-degree
// rotation (width and height swap when rotated).
struct Placement {
  ItemId item_id = 0;
  Coord x = 0;
  Coord y = 0;
  bool rotated = false;
};

// Half-open axis-parallel rectangle [x, x+w) x [y, y+h). Touching edges do
// not count as intersection.
struct Rect {
  Coord x = 0;
  Coord y = 0;
  Coord w = 0;
  Coord h = 0;

  Coord x2() const { return x + w; }
  Coord y2() const { return y + h; }
  long area() const { return static_cast<long>(w) * h; }
  bool contains(const Rect& o) const {
    return o.x >= x && o.y >= y && o.x2() <= x2() && o.y2() <= y2();
  }
};

inline bool rects_intersect(const Rect& a, const Rect& b) {
  return a.x < b.x2() && b.x < a.x2() && a.y < b.y2() && b.y < a.y2();
}

// A (partial) packing of items into the square knapsack [0,N]^2.
struct Packing {
  Coord knapsack_side = 0;
  std::vector<Placement> placements;
};

enum class ViolationKind { overlap, out_of_bounds, duplicate, unknown_item };

struct Violation {
  ViolationKind kind;
  ItemId a = 0;
  ItemId b = 0;  // second id for overlaps, unused otherwise
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

std::string to_string(ViolationKind k);

// Occupied rectangle of a placement given its item.
Rect placed_rect(const Item& item, const Placement& p);

// Exhaustive integer-exact feasibility check: reports every duplicate,
// unknown id, out-of-bounds rectangle and pairwise interior overlap.
ValidationReport validate_packing(const std::vector<Item>& instance,
                                  const Packing& packing);

long total_area(const std::vector<Item>& items);

long total_profit(const std::vector<Item>& items);

const Item* find_item(const std::vector<Item>& items, ItemId id);

}  // namespace gkp
