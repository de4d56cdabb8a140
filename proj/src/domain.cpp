#include "cts/domain.hpp"

#include <algorithm>

namespace cts {

FeasibilityError::FeasibilityError(int product, int warehouse, long requested, long available)
    : Error("infeasible plan: product " + std::to_string(product) + " at warehouse " +
            std::to_string(warehouse) + " needs " + std::to_string(requested) +
            " units, only " + std::to_string(available) + " in stock"),
      product(product), warehouse(warehouse) {}

CostBreakdown& CostBreakdown::operator+=(const CostBreakdown& o) {
    distance_cost += o.distance_cost;
    carton_cost += o.carton_cost;
    warehouse_cost += o.warehouse_cost;
    penalty_cost += o.penalty_cost;
    total += o.total;
    unfulfilled_count += o.unfulfilled_count;
    return *this;
}

SourcingPlan SourcingPlan::all_dropped(const std::vector<CustomerOrder>& orders) {
    SourcingPlan plan;
    plan.assignment.reserve(orders.size());
    for (const auto& order : orders) {
        std::vector<int> row(order.demand.size(), kNoDemand);
        for (size_t i = 0; i < order.demand.size(); ++i)
            if (order.demand[i] > 0) row[i] = kDropped;
        plan.assignment.push_back(std::move(row));
    }
    return plan;
}

long carton_count(long demand_qty, int quantization) {
    if (quantization < 1)
        throw std::invalid_argument("carton_count: quantization must be >= 1, got " +
                                    std::to_string(quantization));
    if (demand_qty < 0)
        throw std::invalid_argument("carton_count: demand must be >= 0");
    return (demand_qty + quantization - 1) / quantization;
}

double distance(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

void validate_plan(const SourcingPlan& plan,
                   const std::vector<CustomerOrder>& orders,
                   const std::vector<Warehouse>& warehouses,
                   const std::vector<ProductSpec>& products) {
    const int n = static_cast<int>(warehouses.size());
    const size_t m = products.size();
    if (plan.assignment.size() != orders.size())
        throw InvalidPlanError("plan covers " + std::to_string(plan.assignment.size()) +
                               " customers, step has " + std::to_string(orders.size()));
    for (size_t k = 0; k < orders.size(); ++k) {
        if (orders[k].demand.size() != m)
            throw InvalidPlanError("order " + std::to_string(k) + " demand size mismatch");
        if (plan.assignment[k].size() != m)
            throw InvalidPlanError("plan row " + std::to_string(k) + " has wrong length");
        for (size_t i = 0; i < m; ++i) {
            const int a = plan.assignment[k][i];
            const int d = orders[k].demand[i];
            if (a >= n || a < kNoDemand)
                throw InvalidPlanError("plan line (" + std::to_string(k) + "," +
                                       std::to_string(i) + ") references warehouse " +
                                       std::to_string(a));
            if (d > 0 && a == kNoDemand)
                throw InvalidPlanError("positive line (" + std::to_string(k) + "," +
                                       std::to_string(i) + ") left unassigned");
            if (d == 0 && a != kNoDemand)
                throw InvalidPlanError("zero-demand line (" + std::to_string(k) + "," +
                                       std::to_string(i) + ") carries an assignment");
        }
    }
}

CostBreakdown plan_cost(const SourcingPlan& plan,
                        const std::vector<CustomerOrder>& orders,
                        const std::vector<Warehouse>& warehouses,
                        const std::vector<ProductSpec>& products,
                        const CostWeights& weights) {
    validate_plan(plan, orders, warehouses, products);

    CostBreakdown cost;
    const int n = static_cast<int>(warehouses.size());
    std::vector<char> pair_used(n, 0);  // reused per customer

    for (size_t k = 0; k < orders.size(); ++k) {
        std::fill(pair_used.begin(), pair_used.end(), 0);
        for (size_t i = 0; i < products.size(); ++i) {
            const int a = plan.assignment[k][i];
            if (a == kNoDemand) continue;
            if (a == kDropped) {
                cost.penalty_cost += weights.unfulfilment_penalty;
                cost.unfulfilled_count += 1;
                continue;
            }
            cost.carton_cost += weights.carton_weight *
                                carton_count(orders[k].demand[i], products[i].quantization);
            if (!pair_used[a]) {
                pair_used[a] = 1;
                cost.distance_cost +=
                    weights.distance_weight * distance(warehouses[a].location, orders[k].location);
                cost.warehouse_cost += warehouses[a].activation_cost;
            }
        }
    }
    cost.total = cost.distance_cost + cost.carton_cost + cost.warehouse_cost + cost.penalty_cost;
    return cost;
}

}  // namespace cts
