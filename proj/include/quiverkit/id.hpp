#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace quiverkit {

// Name of a vertex or edge.
//
// An Id is one of
//   * a text label, e.g. "a" or "ℓ" (nonempty, no control characters);
//   * a natural number, used as the tag of constructed elements;
//   * a tuple of Ids, e.g. (0,e), (1,v,w) or the pair (s,t).
//
// A tagged identifier such as (0,e) is simply the tuple whose first element is
// the natural 0. Ids are totally ordered: naturals < text < tuples, naturals by
// value, text bytewise, tuples lexicographically. Every "pick some element"
// step in the library picks the minimum in this order.
class Id {
 public:
  enum class Kind { natural, text, tuple };

  Id(std::string text);  // NOLINT(google-explicit-constructor)
  Id(const char* text);  // NOLINT(google-explicit-constructor)

  static Id natural(std::uint64_t n);
  static Id tuple(std::vector<Id> elements);
  static Id pair(Id first, Id second);
  // (tag, payload...)
  static Id tagged(std::uint64_t tag, std::initializer_list<Id> payload);

  Kind kind() const noexcept;
  bool is_text() const noexcept { return kind() == Kind::text; }
  bool is_natural() const noexcept { return kind() == Kind::natural; }
  bool is_tuple() const noexcept { return kind() == Kind::tuple; }

  // Accessors throw quiverkit::Error on a kind mismatch.
  const std::string& text() const;
  std::uint64_t number() const;
  const std::vector<Id>& elements() const;

  // Human-readable form: text as is, naturals in decimal, tuples as (a,b,...).
  std::string to_string() const;

  friend bool operator==(const Id& a, const Id& b);
  friend std::strong_ordering operator<=>(const Id& a, const Id& b);

 private:
  using Tuple = std::shared_ptr<const std::vector<Id>>;
  explicit Id(std::variant<std::uint64_t, std::string, Tuple> value);

  std::variant<std::uint64_t, std::string, Tuple> value_;
};

// True if `s` is acceptable as a text label.
bool is_valid_label(std::string_view s) noexcept;

// The element of the one-point set, also the vertex of every bouquet.
Id unit_id();

}  // namespace quiverkit
