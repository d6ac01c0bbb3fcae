#include "quiverkit/id.hpp"

#include <algorithm>

#include "quiverkit/error.hpp"

namespace quiverkit {

Id::Id(std::string text) : value_(std::move(text)) {
  if (!is_valid_label(std::get<std::string>(value_))) {
    throw Error(ErrorKind::invalid_argument,
                "invalid label \"" + std::get<std::string>(value_) + "\"");
  }
}

Id::Id(const char* text) : Id(std::string(text)) {}

Id::Id(std::variant<std::uint64_t, std::string, Tuple> value)
    : value_(std::move(value)) {}

Id Id::natural(std::uint64_t n) { return Id(decltype(value_)(n)); }

Id Id::tuple(std::vector<Id> elements) {
  return Id(decltype(value_)(
      std::make_shared<const std::vector<Id>>(std::move(elements))));
}

Id Id::pair(Id first, Id second) {
  return tuple({std::move(first), std::move(second)});
}

Id Id::tagged(std::uint64_t tag, std::initializer_list<Id> payload) {
  std::vector<Id> elements;
  elements.reserve(payload.size() + 1);
  elements.push_back(natural(tag));
  elements.insert(elements.end(), payload.begin(), payload.end());
  return tuple(std::move(elements));
}

Id::Kind Id::kind() const noexcept {
  switch (value_.index()) {
    case 0:
      return Kind::natural;
    case 1:
      return Kind::text;
    default:
      return Kind::tuple;
  }
}

const std::string& Id::text() const {
  if (auto p = std::get_if<std::string>(&value_)) return *p;
  throw Error(ErrorKind::invalid_argument, "id " + to_string() + " is not text");
}

std::uint64_t Id::number() const {
  if (auto p = std::get_if<std::uint64_t>(&value_)) return *p;
  throw Error(ErrorKind::invalid_argument,
              "id " + to_string() + " is not a natural");
}

const std::vector<Id>& Id::elements() const {
  if (auto p = std::get_if<Tuple>(&value_)) return **p;
  throw Error(ErrorKind::invalid_argument, "id " + to_string() + " is not a tuple");
}

std::string Id::to_string() const {
  switch (kind()) {
    case Kind::natural:
      return std::to_string(std::get<std::uint64_t>(value_));
    case Kind::text:
      return std::get<std::string>(value_);
    case Kind::tuple:
      break;
  }
  std::string out = "(";
  bool first = true;
  for (const Id& e : elements()) {
    if (!first) out += ',';
    first = false;
    out += e.to_string();
  }
  out += ')';
  return out;
}

bool operator==(const Id& a, const Id& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Id& a, const Id& b) {
  if (a.value_.index() != b.value_.index()) {
    return a.value_.index() <=> b.value_.index();
  }
  switch (a.kind()) {
    case Id::Kind::natural:
      return std::get<std::uint64_t>(a.value_) <=> std::get<std::uint64_t>(b.value_);
    case Id::Kind::text: {
      int c = std::get<std::string>(a.value_).compare(std::get<std::string>(b.value_));
      return c <=> 0;
    }
    case Id::Kind::tuple:
      break;
  }
  const auto& x = std::get<Id::Tuple>(a.value_);
  const auto& y = std::get<Id::Tuple>(b.value_);
  if (x == y) return std::strong_ordering::equal;
  return std::lexicographical_compare_three_way(x->begin(), x->end(), y->begin(),
                                                y->end());
}

bool is_valid_label(std::string_view s) noexcept {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return u < 0x20 || u == 0x7f;
  });
}

Id unit_id() { return Id("1"); }

}  // namespace quiverkit
