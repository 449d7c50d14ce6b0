#pragma once

// Vector loop bodies shared by the x86 kernel translation units. Each TU
// includes this inside its own anonymous namespace with a `V` traits type, so
// the instantiations never mix code compiled for different ISAs.

// Expects <cstddef> and <cstdint> to be included already.

template <class V>
struct Loops {
  using u8 = std::uint8_t;
  using reg = typename V::reg;
  static constexpr std::size_t W = V::width;

  static void neg(u8 d, const u8* a, u8* out, std::size_t len) {
    const reg vd = V::set1(d);
    std::size_t i = 0;
    for (; i + W <= len; i += W) V::store(out + i, V::sub(vd, V::load(a + i)));
    for (; i < len; ++i) out[i] = static_cast<u8>(d - a[i]);
  }

  static void imp(u8 d, const u8* a, const u8* b, u8* out, std::size_t len) {
    const reg vd = V::set1(d);
    std::size_t i = 0;
    for (; i + W <= len; i += W) {
      V::store(out + i, V::sub(vd, V::subs(V::load(a + i), V::load(b + i))));
    }
    for (; i < len; ++i) out[i] = static_cast<u8>(d - (a[i] > b[i] ? a[i] - b[i] : 0));
  }

  static void tmin(u8, const u8* a, const u8* b, u8* out, std::size_t len) {
    std::size_t i = 0;
    for (; i + W <= len; i += W) V::store(out + i, V::min(V::load(a + i), V::load(b + i)));
    for (; i < len; ++i) out[i] = a[i] < b[i] ? a[i] : b[i];
  }

  static void tmax(u8, const u8* a, const u8* b, u8* out, std::size_t len) {
    std::size_t i = 0;
    for (; i + W <= len; i += W) V::store(out + i, V::max(V::load(a + i), V::load(b + i)));
    for (; i < len; ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
  }

  static void sconj(u8 d, const u8* a, const u8* b, u8* out, std::size_t len) {
    const reg vd = V::set1(d);
    std::size_t i = 0;
    for (; i + W <= len; i += W) {
      V::store(out + i, V::subs(V::adds(V::load(a + i), V::load(b + i)), vd));
    }
    for (; i < len; ++i) {
      int v = a[i] + b[i] - d;
      out[i] = static_cast<u8>(v < 0 ? 0 : v);
    }
  }

  static void sdisj(u8 d, const u8* a, const u8* b, u8* out, std::size_t len) {
    const reg vd = V::set1(d);
    std::size_t i = 0;
    for (; i + W <= len; i += W) {
      V::store(out + i, V::min(V::adds(V::load(a + i), V::load(b + i)), vd));
    }
    for (; i < len; ++i) {
      int v = a[i] + b[i];
      out[i] = static_cast<u8>(v > d ? d : v);
    }
  }

  static void iff(u8 d, const u8* a, const u8* b, u8* out, std::size_t len) {
    const reg vd = V::set1(d);
    std::size_t i = 0;
    for (; i + W <= len; i += W) {
      reg x = V::load(a + i);
      reg y = V::load(b + i);
      V::store(out + i, V::sub(vd, V::bor(V::subs(x, y), V::subs(y, x))));
    }
    for (; i < len; ++i) out[i] = static_cast<u8>(d - (a[i] > b[i] ? a[i] - b[i] : b[i] - a[i]));
  }

  static void coef(u8 d, u8 value, const u8* a, u8* out, std::size_t len) {
    const reg vd = V::set1(d);
    const reg vv = V::set1(value);
    std::size_t i = 0;
    for (; i + W <= len; i += W) V::store(out + i, V::band(V::cmpeq(V::load(a + i), vv), vd));
    for (; i < len; ++i) out[i] = a[i] == value ? d : 0;
  }

  static void max_into(const u8* a, u8* acc, std::size_t len) {
    std::size_t i = 0;
    for (; i + W <= len; i += W) V::store(acc + i, V::max(V::load(acc + i), V::load(a + i)));
    for (; i < len; ++i) acc[i] = acc[i] > a[i] ? acc[i] : a[i];
  }

  static void min_into(const u8* a, u8* acc, std::size_t len) {
    std::size_t i = 0;
    for (; i + W <= len; i += W) V::store(acc + i, V::min(V::load(acc + i), V::load(a + i)));
    for (; i < len; ++i) acc[i] = acc[i] < a[i] ? acc[i] : a[i];
  }

  static std::size_t find_ne(u8 value, const u8* a, std::size_t len) {
    const reg vv = V::set1(value);
    std::size_t i = 0;
    for (; i + W <= len; i += W) {
      unsigned mask = V::movemask(V::cmpeq(V::load(a + i), vv));
      if (mask != V::full_mask) return i + static_cast<std::size_t>(__builtin_ctz(~mask));
    }
    for (; i < len; ++i) {
      if (a[i] != value) return i;
    }
    return len;
  }
};
