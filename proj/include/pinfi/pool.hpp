#pragma once

#include "pinfi/errors.hpp"

namespace pinfi {

/// Immutable constant-product pool state over a dissipative / non-dissipative
/// asset pair. Every operation returns a new state.
struct PoolState {
    double dissipative_reserve = 0.0;  ///< power*hours
    double numeraire_reserve = 0.0;    ///< USD value of the non-dissipative side
};

enum class TradeKind { Sell, Buy, Expiry, Replenish };

struct TradeEvent {
    TradeKind kind;
    double size;  ///< power*hours, > 0
};

double spot_price(const PoolState& pool);

/// Seller deposits `size` dissipative assets; reserve product is preserved.
PoolState apply_sell(const PoolState& pool, double size);

/// `size` dissipative assets expire; the numeraire reserve is untouched
/// (the reserve product is not preserved, expiry destroys value).
PoolState apply_expiry(const PoolState& pool, double size);

/// Buyer withdraws `size` dissipative assets; reserve product is preserved.
PoolState apply_buy(const PoolState& pool, double size);

/// LPs immediately replenish `size` dissipative assets; numeraire untouched.
PoolState apply_replenish(const PoolState& pool, double size);

/// sell then expiry of the same size: dissipative reserve is restored bitwise,
/// spot price is scaled by N/(N+size).
PoolState quasi_static_sell_step(const PoolState& pool, double size);

/// buy then replenish of the same size: dissipative reserve is restored
/// bitwise, spot price is scaled by N/(N-size).
PoolState quasi_static_buy_step(const PoolState& pool, double size);

}  // namespace pinfi
