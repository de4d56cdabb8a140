#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace cts {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A sourcing plan references an id that does not exist, or assigns a
/// zero-demand line.
struct InvalidPlanError : Error {
    using Error::Error;
};

/// A plan draws more of some product from some warehouse than is in stock.
struct FeasibilityError : Error {
    FeasibilityError(int product, int warehouse, long requested, long available);
    int product;
    int warehouse;
};

/// An instance is too large for exhaustive enumeration.
struct SizeGuardError : Error {
    using Error::Error;
};

/// Bad runtime configuration (missing checkpoint, malformed config file, ...).
struct ConfigError : Error {
    using Error::Error;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Point&) const = default;
};

/// Axis-aligned rectangle in which warehouses and customers live.
struct PlanArea {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 1.0;
    double max_y = 1.0;

    double width() const { return max_x - min_x; }
    double height() const { return max_y - min_y; }
    double diagonal() const { return std::hypot(width(), height()); }
    bool contains(const Point& p) const {
        return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
    }
    bool operator==(const PlanArea&) const = default;
};

/// One product type. `quantization` is the number of items that fit into a
/// single carton; `max_levels[j]` is the stock ceiling at warehouse j.
struct ProductSpec {
    int id = 0;
    int quantization = 1;
    std::vector<int> max_levels;
    bool operator==(const ProductSpec&) const = default;
};

struct Warehouse {
    int id = 0;
    Point location;
    double activation_cost = 0.0;  // fixed charge per order it sources
    bool operator==(const Warehouse&) const = default;
};

struct CustomerOrder {
    int customer_id = 0;
    Point location;
    std::vector<int> demand;  // demand[i]: units of product i
    bool operator==(const CustomerOrder&) const = default;
};

/// Per-unit weights of the cost components.
struct CostWeights {
    double distance_weight = 100.0;
    double carton_weight = 5.0;
    double warehouse_weight = 40.0;
    double unfulfilment_penalty = 100.0;
    bool operator==(const CostWeights&) const = default;
};

struct CostBreakdown {
    double distance_cost = 0.0;
    double carton_cost = 0.0;
    double warehouse_cost = 0.0;
    double penalty_cost = 0.0;
    double total = 0.0;
    long unfulfilled_count = 0;

    CostBreakdown& operator+=(const CostBreakdown& o);
    bool operator==(const CostBreakdown&) const = default;
};

/// Line markers used in SourcingPlan::assignment.
inline constexpr int kDropped = -1;   // positive demand, not fulfilled
inline constexpr int kNoDemand = -2;  // zero-demand line, carries no assignment

/// Warehouse choice per (customer, product) line of one timestep.
/// assignment[k][i] is a warehouse index, kDropped, or kNoDemand.
struct SourcingPlan {
    std::vector<std::vector<int>> assignment;

    int n_customers() const { return static_cast<int>(assignment.size()); }
    int& at(int customer, int product) { return assignment[customer][product]; }
    int at(int customer, int product) const { return assignment[customer][product]; }

    /// Plan with every line of `orders` unassigned (positive lines dropped).
    static SourcingPlan all_dropped(const std::vector<CustomerOrder>& orders);

    bool operator==(const SourcingPlan&) const = default;
};

/// Stock matrix, indexed (product i, warehouse j).
class Inventory {
  public:
    Inventory() = default;
    Inventory(int n_products, int n_warehouses, int fill = 0)
        : products_(n_products), warehouses_(n_warehouses),
          cells_(static_cast<size_t>(n_products) * n_warehouses, fill) {}

    int n_products() const { return products_; }
    int n_warehouses() const { return warehouses_; }
    int& at(int product, int warehouse) { return cells_[index(product, warehouse)]; }
    int at(int product, int warehouse) const { return cells_[index(product, warehouse)]; }

    bool operator==(const Inventory&) const = default;

  private:
    size_t index(int product, int warehouse) const {
        return static_cast<size_t>(product) * warehouses_ + warehouse;
    }
    int products_ = 0;
    int warehouses_ = 0;
    std::vector<int> cells_;
};

/// Cartons needed to pack `demand_qty` items, `quantization` items per carton.
long carton_count(long demand_qty, int quantization);

/// Euclidean distance.
double distance(const Point& a, const Point& b);

/// Costs a plan against one timestep's orders. A trip (distance plus the
/// warehouse's activation cost) is charged once per distinct (warehouse,
/// customer) pair; cartons are charged per assigned line; the penalty is
/// charged per dropped positive line.
CostBreakdown plan_cost(const SourcingPlan& plan,
                        const std::vector<CustomerOrder>& orders,
                        const std::vector<Warehouse>& warehouses,
                        const std::vector<ProductSpec>& products,
                        const CostWeights& weights);

/// Throws InvalidPlanError unless the plan's shape and ids are consistent
/// with the given orders/warehouses/products.
void validate_plan(const SourcingPlan& plan,
                   const std::vector<CustomerOrder>& orders,
                   const std::vector<Warehouse>& warehouses,
                   const std::vector<ProductSpec>& products);

}  // namespace cts
