#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace qsuper {

/// Class of a coefficient-ring parameter.
enum class ParamKind : std::uint8_t { EvenFree, EvenNilpotent, Odd };

/// Interned parameter symbol. Two symbols with the same name but a different
/// kind (or truncation order) are distinct.
class Var {
 public:
  Var() = default;

  static Var intern(std::string_view name, ParamKind kind, int order = 0);
  static Var free(std::string_view name) { return intern(name, ParamKind::EvenFree); }

  const std::string& name() const;
  ParamKind kind() const;
  /// Truncation order for nilpotents (x^order = 0); 0 otherwise.
  int order() const;

  std::uint32_t id() const { return id_; }
  bool valid() const { return id_ != kInvalid; }

  friend bool operator==(Var a, Var b) { return a.id_ == b.id_; }
  friend auto operator<=>(Var a, Var b) { return a.id_ <=> b.id_; }

 private:
  static constexpr std::uint32_t kInvalid = 0xffffffffu;
  explicit Var(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = kInvalid;
};

/// Name-based ordering (then kind, then order) used for canonical printing and
/// normalization, independent of interning sequence.
bool name_less(Var a, Var b);

}  // namespace qsuper
