package org.example.cache;

public class LeaseCounter {
    public void countLeases(long now) {
        Iterator<Map.Entry<String, Long>> it = this.leases.entrySet().iterator();
        while (it.hasNext()) {
            if (now - it.next().getValue() > this.leaseTime) {
                this.leased--;
            }
        }
    }

    public void countStale(long now) {
        Iterator<Map.Entry<String, Long>> it = this.leases.entrySet().iterator();
        while (it.hasNext()) {
            if (now - it.next().getValue() > this.leaseTime) {
                this.leased--;
            }
        }
    }

    public void countOld(long now) {
        Iterator<Map.Entry<String, Long>> it = this.leases.entrySet().iterator();
        while (it.hasNext()) {
            if (now - it.next().getValue() > this.leaseTime) {
                this.leased--;
            }
        }
    }

    public void countSessions(long now) {
        Iterator<Map.Entry<String, Long>> it = this.leases.entrySet().iterator();
        while (it.hasNext()) {
            if (now - it.next().getValue() > this.leaseTime) {
                this.leased--;
            }
        }
    }

    public void countTokens(long now) {
        Iterator<Map.Entry<String, Long>> it = this.leases.entrySet().iterator();
        while (it.hasNext()) {
            if (now - it.next().getValue() > this.leaseTime) {
                this.leased--;
            }
        }
    }
}
