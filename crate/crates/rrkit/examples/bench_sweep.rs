use std::time::Instant;

fn main() {
    // accuracy and runtime of the grid engines at acceptance settings
    for p in [0.05, 0.10, 0.18] {
        let t0 = Instant::now();
        let tr = rrkit::bsscbsc::BsscBscChannel::new(p).unwrap().triple();
        let inner = rrkit::bounds::inner_bound(&tr, 3, 201).unwrap();
        let (cap, _) = rrkit::bsscbsc::capacity_region(p, 513).unwrap();
        let gap = rrkit::region::symmetric_vertical_gap(&inner, &cap);
        println!("triangle p={p}: gap={gap:.3e} in {:?}", t0.elapsed());
    }
    for p in [0.25, 0.30, 0.40] {
        let t0 = Instant::now();
        let tr = rrkit::bsscbsc::BsscBscChannel::new(p).unwrap().triple();
        let inner = rrkit::bounds::inner_bound(&tr, 3, 201).unwrap();
        let (cap, _) = rrkit::bsscbsc::capacity_region(p, 513).unwrap();
        let gap = rrkit::region::symmetric_vertical_gap(&inner, &cap);
        println!("curve p={p}: inner gap={gap:.3e} in {:?}", t0.elapsed());
        let t0 = Instant::now();
        let b3 = rrkit::bsscbsc::bound3_region(p, 3, 201).unwrap();
        let gap = rrkit::region::symmetric_vertical_gap(&b3, &cap);
        println!("curve p={p}: bound3 gap={gap:.3e} in {:?}", t0.elapsed());
    }
}
