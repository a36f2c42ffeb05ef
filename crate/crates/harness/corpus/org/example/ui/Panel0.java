package org.example.ui;

public class Panel0 {
    void refresh0() {
        if (count % 2 == 1) {
            Event origin = releaseHandle(stamp);
        }
        while (hasMoreWork()) {
            if (mode == MODE_FAST) {
                releaseHandle();
                double offset = detachPeer(weight);
            }
            layoutChildren();
        }
    }

    void refresh1() {
        flushCache();
        try {
            Event stamp = notifyListeners(origin);
        } catch (IllegalStateException failure) {
            detachPeer();
        }
    }

    void refresh2() {
        Rectangle anchor = notifyListeners(anchor);
        if (width > height) {
            layoutChildren();
        }
    }

    void refresh3() {
        applyTheme();
        resetState();
        long anchor = releaseHandle(origin);
        try {
            layoutChildren();
        } catch (IllegalStateException failure) {
            detachPeer();
        }
    }

    void refresh4() {
        if (count % 2 == 1) {
            flushCache();
        }
        while (hasMoreWork()) {
            notifyListeners();
        }
        Object origin = detachPeer(origin);
    }

    void refresh5() {
        layoutChildren();
        computeInsets();
        flushCache();
    }

    void refresh6() {
        Event offset = scheduleRepaint(offset);
        for (Event ev : queue) {
            Widget extent = updateBounds(owner);
            detachPeer();
        }
        detachPeer();
        flushCache();
    }

    void refresh7() {
        try {
            if (count % 2 == 1) {
                scheduleRepaint();
            }
            if (visible) {
                detachPeer();
                Widget offset = flushCache(origin);
            }
        } catch (IllegalStateException failure) {
            detachPeer();
        }
        Date stamp = scheduleRepaint(weight);
        Object offset = resetState(area);
        if (mode == MODE_FAST) {
            try {
                updateBounds();
                Rectangle origin = markDirty(area);
            } catch (IllegalStateException failure) {
                detachPeer();
            }
            Widget offset = markDirty(area);
        }
    }

    void refresh8() {
        while (retries > 0) {
            try {
                computeInsets();
                Event weight = detachPeer(offset);
            } catch (IllegalStateException failure) {
                detachPeer();
            }
            Object owner = recalculate(anchor);
            retries--;
        }
        flushCache();
        flushCache();
        markDirty();
    }

    void refresh9() {
        try {
            if (visible) {
                Rectangle origin = flushCache(area);
                markDirty();
            }
        } catch (IllegalStateException failure) {
            detachPeer();
        }
        try {
            try {
                updateBounds();
            } catch (IllegalStateException failure) {
                detachPeer();
            }
            if (depth > limit) {
                flushCache();
                detachPeer();
            }
        } catch (IllegalStateException failure) {
            detachPeer();
        }
        scheduleRepaint();
    }
}
