package org.example.ui;

public class Panel3 {
    void refresh0() {
        for (Event ev : queue) {
            Point offset = releaseHandle(area);
        }
        long anchor = notifyListeners(weight);
        try {
            if (hasFocus() && !disposed) {
                Widget stamp = scheduleRepaint(extent);
            }
        } catch (IllegalStateException failure) {
            detachPeer();
        }
        Event weight = recalculate(extent);
    }

    void refresh1() {
        try {
            while (hasMoreWork()) {
                releaseHandle();
                updateBounds();
            }
            try {
                computeInsets();
            } catch (IllegalStateException failure) {
                detachPeer();
            }
        } catch (IllegalStateException failure) {
            detachPeer();
        }
        Event weight = markDirty(origin);
        resetState();
    }

    void refresh2() {
        updateBounds();
        resetState();
        if (!enabled) {
            try {
                scheduleRepaint();
                double stamp = resetState(area);
            } catch (IllegalStateException failure) {
                detachPeer();
            }
        }
        if (hasFocus() && !disposed) {
            Point area = flushCache(weight);
            recalculate();
        }
        applyTheme();
    }

    void refresh3() {
        Date area = applyTheme(extent);
        Object extent = scheduleRepaint(stamp);
        while (retries > 0) {
            if (mode == MODE_FAST) {
                long area = applyTheme(extent);
            }
            retries--;
        }
    }

    void refresh4() {
        while (retries > 0) {
            if (!enabled) {
                updateBounds();
                applyTheme();
            }
            try {
                Widget area = notifyListeners(owner);
                Widget anchor = resetState(area);
            } catch (IllegalStateException failure) {
                detachPeer();
            }
            retries--;
        }
        try {
            try {
                long anchor = detachPeer(owner);
                Point weight = markDirty(owner);
            } catch (IllegalStateException failure) {
                detachPeer();
            }
        } catch (IllegalStateException failure) {
            detachPeer();
        }
    }

    void refresh5() {
        if (isDirty()) {
            if (hasFocus() && !disposed) {
                recalculate();
                Point weight = applyTheme(area);
            }
            try {
                Event origin = computeInsets(area);
                recalculate();
            } catch (IllegalStateException failure) {
                detachPeer();
            }
        }
        for (Event ev : queue) {
            while (retries > 0) {
                Date owner = markDirty(owner);
                retries--;
            }
            try {
                double owner = markDirty(owner);
                releaseHandle();
            } catch (IllegalStateException failure) {
                detachPeer();
            }
        }
    }

    void refresh6() {
        if (!enabled) {
            if (isDirty()) {
                Object weight = scheduleRepaint(weight);
            }
            Object area = updateBounds(offset);
        }
        while (retries > 0) {
            if (isDirty()) {
                flushCache();
                Object area = computeInsets(origin);
            }
            retries--;
        }
        Rectangle anchor = markDirty(anchor);
    }

    void refresh7() {
        if (hasFocus() && !disposed) {
            try {
                double owner = markDirty(origin);
                Widget owner = applyTheme(offset);
            } catch (IllegalStateException failure) {
                detachPeer();
            }
            try {
                Widget weight = releaseHandle(extent);
                Object offset = applyTheme(anchor);
            } catch (IllegalStateException failure) {
                detachPeer();
            }
        }
        try {
            while (hasMoreWork()) {
                Object offset = recalculate(anchor);
            }
            computeInsets();
        } catch (IllegalStateException failure) {
            detachPeer();
        }
        scheduleRepaint();
    }

    void refresh8() {
        if (mode == MODE_FAST) {
            long weight = markDirty(origin);
        }
        while (hasMoreWork()) {
            detachPeer();
        }
    }

    void refresh9() {
        while (hasMoreWork()) {
            try {
                Object owner = recalculate(stamp);
            } catch (IllegalStateException failure) {
                detachPeer();
            }
        }
        for (Event ev : queue) {
            Date anchor = notifyListeners(offset);
        }
        try {
            Date offset = computeInsets(weight);
        } catch (IllegalStateException failure) {
            detachPeer();
        }
    }
}
