#pragma once

// Thin RAII layer over the C interface; the CLI sees nothing else.

#include <memory>
#include <stdexcept>
#include <string>

#include "sheafcalc/sheafcalc.h"

namespace cli {

struct EngineFailure : std::runtime_error {
  sc_status status;
  EngineFailure(sc_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
  std::string name() const { return sc_status_name(status); }
};

inline void check(sc_status s) {
  if (s != SC_OK) throw EngineFailure(s, sc_last_error());
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const noexcept { Free(p); }
};

using Threefold = std::unique_ptr<sc_threefold, Deleter<sc_threefold, sc_threefold_free>>;
using Table = std::unique_ptr<sc_table, Deleter<sc_table, sc_table_free>>;
using Expr = std::unique_ptr<sc_expr, Deleter<sc_expr, sc_expr_free>>;
using Env = std::unique_ptr<sc_env, Deleter<sc_env, sc_env_free>>;
using PresetList = std::unique_ptr<sc_preset_list, Deleter<sc_preset_list, sc_preset_list_free>>;

inline std::string take_string(char* s) {
  std::string out = s ? s : "";
  sc_string_free(s);
  return out;
}

inline Threefold resolve_threefold(const std::string& name) {
  sc_threefold* raw = nullptr;
  check(sc_threefold_resolve(name.c_str(), &raw));
  return Threefold(raw);
}

inline sc_threefold_info info_of(const sc_threefold* X) {
  sc_threefold_info info{};
  check(sc_threefold_info_get(X, &info));
  return info;
}

}  // namespace cli
