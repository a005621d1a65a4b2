#include "pinfi/pool.hpp"

namespace pinfi {

double spot_price(const PoolState& pool) {
    return pool.numeraire_reserve / pool.dissipative_reserve;
}

PoolState apply_sell(const PoolState& pool, double size) {
    if (!(size > 0.0)) throw NonPositiveSize{};
    const double n = pool.dissipative_reserve;
    return PoolState{n + size, n / (n + size) * pool.numeraire_reserve};
}

PoolState apply_expiry(const PoolState& pool, double size) {
    if (!(size > 0.0)) throw NonPositiveSize{};
    if (!(size < pool.dissipative_reserve)) throw SizeExceedsReserve{};
    return PoolState{pool.dissipative_reserve - size, pool.numeraire_reserve};
}

PoolState apply_buy(const PoolState& pool, double size) {
    if (!(size > 0.0)) throw NonPositiveSize{};
    if (!(size < pool.dissipative_reserve)) throw SizeExceedsReserve{};
    const double n = pool.dissipative_reserve;
    return PoolState{n - size, n / (n - size) * pool.numeraire_reserve};
}

PoolState apply_replenish(const PoolState& pool, double size) {
    if (!(size > 0.0)) throw NonPositiveSize{};
    return PoolState{pool.dissipative_reserve + size, pool.numeraire_reserve};
}

PoolState quasi_static_sell_step(const PoolState& pool, double size) {
    PoolState after = apply_expiry(apply_sell(pool, size), size);
    // (N + d) - d need not round back to N; the reserve is restored by
    // construction, only the numeraire side carries the price change.
    after.dissipative_reserve = pool.dissipative_reserve;
    return after;
}

PoolState quasi_static_buy_step(const PoolState& pool, double size) {
    PoolState after = apply_replenish(apply_buy(pool, size), size);
    after.dissipative_reserve = pool.dissipative_reserve;
    return after;
}

}  // namespace pinfi
