#include "databus/pauli_string.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>

namespace databus {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

}  // namespace

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Z: return 'Z';
    case Pauli::Y: return 'Y';
  }
  return '?';
}

PauliString::PauliString(std::size_t num_qubits)
    : num_qubits_(num_qubits), xs_(words_for(num_qubits), 0), zs_(words_for(num_qubits), 0) {}

PauliString PauliString::parse(std::string_view text) {
  std::uint8_t phase = 0;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase = (phase + 1) & 3u;
    ++pos;
  }
  PauliString result(text.size() - pos);
  for (std::size_t q = 0; pos < text.size(); ++pos, ++q) {
    switch (text[pos]) {
      case 'I': case '_': break;
      case 'X': result.set(q, Pauli::X); break;
      case 'Y': result.set(q, Pauli::Y); break;
      case 'Z': result.set(q, Pauli::Z); break;
      default:
        throw std::invalid_argument("invalid Pauli character '" + std::string(1, text[pos]) +
                                    "' in \"" + std::string(text) + "\"");
    }
  }
  result.phase_ = phase;
  return result;
}

PauliString PauliString::single(std::size_t num_qubits, std::size_t qubit, Pauli p) {
  PauliString result(num_qubits);
  result.set(qubit, p);
  return result;
}

PauliString PauliString::on(std::size_t num_qubits, std::span<const std::size_t> qubits, Pauli p) {
  PauliString result(num_qubits);
  for (auto q : qubits) {
    result.set(q, p);
  }
  return result;
}

PauliString PauliString::on(std::size_t num_qubits, std::initializer_list<std::size_t> qubits,
                            Pauli p) {
  return on(num_qubits, std::span<const std::size_t>(qubits.begin(), qubits.size()), p);
}

void PauliString::check_index(std::size_t qubit) const {
  if (qubit >= num_qubits_) {
    throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range for " +
                            std::to_string(num_qubits_) + " qubits");
  }
}

void PauliString::check_same_size(const PauliString& other) const {
  if (other.num_qubits_ != num_qubits_) {
    throw std::invalid_argument("Pauli strings have different sizes (" +
                                std::to_string(num_qubits_) + " vs " +
                                std::to_string(other.num_qubits_) + ")");
  }
}

Pauli PauliString::get(std::size_t qubit) const {
  check_index(qubit);
  return static_cast<Pauli>(static_cast<std::uint8_t>(x(qubit)) |
                            (static_cast<std::uint8_t>(z(qubit)) << 1));
}

void PauliString::set(std::size_t qubit, Pauli p) {
  check_index(qubit);
  const auto bits = static_cast<std::uint8_t>(p);
  const std::uint64_t mask = std::uint64_t{1} << (qubit % kWordBits);
  auto& xw = xs_[qubit / kWordBits];
  auto& zw = zs_[qubit / kWordBits];
  xw = (bits & 1u) ? (xw | mask) : (xw & ~mask);
  zw = (bits & 2u) ? (zw | mask) : (zw & ~mask);
}

bool PauliString::x(std::size_t qubit) const {
  return (xs_[qubit / kWordBits] >> (qubit % kWordBits)) & 1u;
}

bool PauliString::z(std::size_t qubit) const {
  return (zs_[qubit / kWordBits] >> (qubit % kWordBits)) & 1u;
}

int PauliString::sign() const {
  if (!is_hermitian()) {
    throw std::domain_error("Pauli string " + str() + " has an imaginary phase");
  }
  return phase_ == 0 ? 1 : -1;
}

bool PauliString::is_identity() const {
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    if (xs_[w] | zs_[w]) return false;
  }
  return true;
}

std::size_t PauliString::weight() const {
  std::size_t total = 0;
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    total += static_cast<std::size_t>(std::popcount(xs_[w] | zs_[w]));
  }
  return total;
}

bool PauliString::commutes(const PauliString& other) const {
  check_same_size(other);
  int parity = 0;
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    parity ^= std::popcount((xs_[w] & other.zs_[w]) ^ (zs_[w] & other.xs_[w])) & 1;
  }
  return parity == 0;
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
  check_same_size(rhs);
  // Per qubit, a cyclic pair (XY, YZ, ZX) contributes +i, the reverse order -i.
  int exponent = phase_ + rhs.phase_;
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    const std::uint64_t x1 = xs_[w], z1 = zs_[w], x2 = rhs.xs_[w], z2 = rhs.zs_[w];
    const std::uint64_t plus = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
    const std::uint64_t minus = (x1 & ~z1 & ~x2 & z2) | (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2);
    exponent += std::popcount(plus) - std::popcount(minus);
    xs_[w] = x1 ^ x2;
    zs_[w] = z1 ^ z2;
  }
  phase_ = static_cast<std::uint8_t>(((exponent % 4) + 4) % 4);
  return *this;
}

void PauliString::apply_cnot(std::size_t control, std::size_t target) {
  check_index(control);
  check_index(target);
  if (control == target) {
    throw std::invalid_argument("CNOT control and target must differ");
  }
  const bool xc = x(control), zc = z(control), xt = x(target), zt = z(target);
  if (xc && zt && (xt == zc)) {
    negate();
  }
  if (xc) set(target, static_cast<Pauli>((static_cast<std::uint8_t>(!xt)) | (zt << 1)));
  if (zt) set(control, static_cast<Pauli>(static_cast<std::uint8_t>(xc) | ((!zc) << 1)));
}

void PauliString::apply_h(std::size_t qubit) {
  check_index(qubit);
  const bool xq = x(qubit), zq = z(qubit);
  if (xq && zq) negate();
  set(qubit, static_cast<Pauli>(static_cast<std::uint8_t>(zq) | (xq << 1)));
}

PauliString PauliString::select(std::span<const std::size_t> qubits) const {
  PauliString result(qubits.size());
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    result.set(i, get(qubits[i]));
  }
  result.phase_ = phase_;
  return result;
}

PauliString PauliString::embed(std::size_t num_qubits, std::size_t offset) const {
  if (offset + num_qubits_ > num_qubits) {
    throw std::out_of_range("embedding does not fit in the target register");
  }
  PauliString result(num_qubits);
  for (std::size_t q = 0; q < num_qubits_; ++q) {
    result.set(offset + q, get(q));
  }
  result.phase_ = phase_;
  return result;
}

std::string PauliString::str() const {
  std::string out;
  out.reserve(num_qubits_ + 2);
  switch (phase_) {
    case 0: out += '+'; break;
    case 1: out += "+i"; break;
    case 2: out += '-'; break;
    default: out += "-i"; break;
  }
  for (std::size_t q = 0; q < num_qubits_; ++q) {
    out += to_char(get(q));
  }
  return out;
}

std::ostream& operator<<(std::ostream& out, const PauliString& p) { return out << p.str(); }

}  // namespace databus
